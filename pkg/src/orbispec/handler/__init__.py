"""Renderers behind the command line: each turns a request into the text
the command prints."""
