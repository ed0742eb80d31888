"""Shorthands for paths to bundled fixtures."""

import pathlib

base = pathlib.Path(__file__).parent

fixtures = base / "fixtures"

bundled_workspace = fixtures / "bundled.toml"
geometric_fixture = fixtures / "affine_line_square.toml"
