"""Exact-arithmetic knot invariants and sliceness scanning.

The main entry points:

- :func:`parse_pd` / :func:`parse_dt` / :func:`parse_braid` build diagrams,
- :func:`homology_ranks` + :func:`extract_s` give Khovanov ranks and s,
- :func:`homfly` / :func:`alexander` give the polynomial invariants,
- :func:`analyze` / :func:`scan` run the batch sliceness pipeline.
"""

from .braid import (
    BraidError,
    BraidWord,
    bennequin_euler,
    closure,
    expand_bands,
    exponent_sum,
    is_quasipositive_presentation,
    parse_braid,
    quasipositive_factor_count,
    s_quasipositive,
)
from .diagram import (
    DiagramError,
    PlanarDiagram,
    add_kink,
    canonical_pd_string,
    mirror,
    parse_dt,
    parse_pd,
    pretzel,
    seifert_circles,
    switch_crossing,
    writhe,
)
from .khovanov import (
    BigradedRanks,
    ResourceLimitError,
    homological_width,
    homology_ranks,
    poincare_polynomial,
)
from .pipeline import (
    InvariantReport,
    ReportCache,
    ScanResult,
    analyze,
    parse_knot,
    read_corpus,
    scan,
    write_csv,
    write_json,
)
from .poly import Laurent1, Laurent2
from .polyinv import VSpan, alexander, homfly, morton_check, qp_obstruction, v_span
from .rasmussen import (
    ExtractionError,
    SResult,
    crossing_change_check,
    decomposition_quotient,
    extract_s,
    lee_condition,
    slice_bennequin_bound,
    slice_genus_lower_bound,
    writhe_seifert_lower_bound,
)
from .signature import signature
from .skein import SkeinBudgetError

__version__ = "1.0.0"
