"""Finite groups by multiplication table, their conjugacy classes and wreath
products."""
