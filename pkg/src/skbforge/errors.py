"""Typed errors raised across the toolkit.

Every error is a subclass of SkbError so callers (notably the CLI) can map
validation failures to one exit code and I/O failures to another.  Parsers
attach a 1-based line number where one is known.
"""

from __future__ import annotations


class SkbError(Exception):
    """Base class for all toolkit errors."""


class ParseError(SkbError):
    """A malformed input file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# --- ingestion ---------------------------------------------------------------

class MalformedLine(ParseError):
    pass


class DuplicateSenseId(ParseError):
    pass


class EmptyDefinition(ParseError):
    pass


class MissingSenseId(ParseError):
    pass


class CyclicHeads(ParseError):
    """Head pointers do not form a single-rooted tree (self-loop, cycle,
    unreachable token, out-of-range head, or root count != 1)."""


class NonContiguousIndices(ParseError):
    pass


class EmptyList(ParseError):
    pass


class DimMismatch(ParseError):
    pass


class NonFiniteValue(ParseError):
    pass


class VersionMismatch(ParseError):
    pass


# --- lexicon -----------------------------------------------------------------

class UnknownSememe(SkbError):
    pass


class EmptySkb(SkbError):
    pass


class UnknownWord(SkbError):
    pass


# --- sememe set construction ---------------------------------------------------

class EmptyResult(SkbError):
    pass


class NoAnnotations(SkbError):
    pass


class DegenerateTrim(SkbError):
    pass


# --- extraction / distillation -------------------------------------------------

class MissingParse(SkbError):
    pass


class SememeNotInTokens(SkbError):
    pass


# --- consistency evaluation ----------------------------------------------------

class TooSmall(SkbError):
    pass


class NoEmbedding(SkbError):
    pass


class EmptyTrain(SkbError):
    pass


class EmptyGold(SkbError):
    pass


class NoUsableSenses(SkbError):
    pass
