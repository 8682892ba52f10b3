"""Exception types shared across the package."""


class ArtifactError(Exception):
    """Base class. The CLI maps every subclass to exit code 2."""


class ResourceError(ArtifactError):
    """A lexicon resource file is missing, empty or malformed."""


class ParseError(ArtifactError):
    """Tagged input could not be parsed."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class TransferError(ArtifactError):
    """No transfer rule applies, or a word is missing from the lexicon."""

    def __init__(self, message, clause=None):
        super().__init__(message)
        self.clause = clause


class UnknownWordError(TransferError):
    def __init__(self, word, tag=None):
        super().__init__(f"unknown word {word!r}" + (f" ({tag})" if tag else ""))
        self.word = word
        self.tag = tag


class GenerationError(ArtifactError):
    """The generator was asked for a form it has no table row for."""


class InputError(ArtifactError):
    """Bad user data: empty token, mismatched files, duplicate ids."""
