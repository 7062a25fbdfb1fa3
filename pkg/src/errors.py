"""
Exception hierarchy for necklace ranking
"""


class NecklaceError(ValueError):
    """Base class for every error raised by the ranking library"""


class InvalidWordError(NecklaceError):
    """A word or an index/length argument is malformed or out of range"""


class NonCanonicalWordError(NecklaceError):
    """A ranking entry point received a word that is not a canonical unlabelled representative"""


class ConventionError(NecklaceError):
    """An exactness check failed: inexact division or a broken rank identity"""


class MissingBoundError(NecklaceError):
    """WX lookup on an entry that was never stored"""


class OracleBoundError(NecklaceError):
    """Brute-force enumeration requested beyond the configured size"""
