"""Stable-fixpoint engine for ground hybrid knowledge bases."""

try:
    from ._core import (  # type: ignore[attr-defined]
        EXAMPLES,
        KbParseError,
        KnowledgeBase,
        NonConvergenceError,
        SignatureTooLargeError,
        TooLargeError,
        check_model,
        enumerate_fixpoints,
        lfp,
        parse_kb,
        print_kb,
        report,
    )
except ImportError:  # in-tree runs: the extension sits next to the package
    from _core import (  # type: ignore[no-redef]
        EXAMPLES,
        KbParseError,
        KnowledgeBase,
        NonConvergenceError,
        SignatureTooLargeError,
        TooLargeError,
        check_model,
        enumerate_fixpoints,
        lfp,
        parse_kb,
        print_kb,
        report,
    )

__all__ = [
    "EXAMPLES",
    "KbParseError",
    "KnowledgeBase",
    "NonConvergenceError",
    "SignatureTooLargeError",
    "TooLargeError",
    "check_model",
    "enumerate_fixpoints",
    "lfp",
    "parse_kb",
    "print_kb",
    "report",
]
