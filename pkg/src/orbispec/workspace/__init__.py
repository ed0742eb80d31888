"""Workspace files: the groups, Hodge data, explicit triples, nodes and jobs
a run works on."""
