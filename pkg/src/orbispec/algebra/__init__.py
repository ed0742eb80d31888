"""Group rings over finite-coordinate abelian groups, truncated series and
the power structure they carry."""
