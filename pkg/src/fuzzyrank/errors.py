"""Shared error base classes.

Domain errors (bad data, bad references, invalid requests) derive from
DomainError and map to exit code 1 in the CLI. Environment problems such as
unreadable files surface as the builtin OSError family and map to exit code 2.
"""
from __future__ import annotations


class DomainError(Exception):
    """A problem with the data or the request, not with the environment."""
