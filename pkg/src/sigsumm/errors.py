"""Exception and warning types shared across the package."""


class SigsummError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDocument(SigsummError):
    """Document text contains no sentences."""


class EmptyVocabulary(SigsummError):
    """No term survived normalization, so no matrix can be built."""


class SignalNotInDocument(SigsummError):
    """Every unigram of a keyword signal is missing from the vocabulary."""


class NoEdges(SigsummError):
    """Centrality requested on a graph without edges."""


class EmptyCohort(SigsummError):
    """Subgraph induction requested for an empty node set."""


class ShapeMismatch(SigsummError):
    """Matrix operands do not conform."""


class InvalidRank(SigsummError):
    """Factorization rank outside [1, min(m, n)]."""


class DegenerateFactors(SigsummError):
    """Factor matrix sums to zero; term contributions are undefined."""


class DifferentDocuments(SigsummError):
    """Summaries being compared come from different documents."""


class InsufficientKeywords(SigsummError):
    """Document has fewer keywords than the requested signal strength."""


class NonConvergenceWarning(UserWarning):
    """Iterative routine hit its iteration cap before reaching tolerance."""
