"""Exact enumeration of k-noncrossing RNA pseudoknot structures and the
Gaussian limit laws of their arc counts.

Submodules:

* ``counting``: exact arbitrary-precision counts (tables, totals, the two
  independent matching-number routes);
* ``oracle``:   brute-force enumeration, the trust anchor;
* ``series``:   exact-rational truncated power series and the machine check
  of the structure/matching composition identity;
* ``limits``:   dominant singularity, limit constants, asymptotics, and the
  empirical central/local limit metrics on exact distributions;
* ``cli``:      command-line front end.
"""

from .counting import (
    CountTable,
    catalan,
    count_table,
    matchings_closed,
    matchings_dp,
    perfect_matchings,
    structure_total,
    structures_with_isolated,
)
from .limits import (
    ArcDistribution,
    DistanceReport,
    LimitConstants,
    SingularityData,
    asymptotic_count_k3,
    distance_report,
    distribution,
    dominant_singularity,
    ks_distance,
    limit_constants,
    llt_distance,
    singularities,
)
from .oracle import Diagram, crossing_number, enumerate_matchings, enumerate_structures, histogram_by_arcs
from .series import TruncSeries, matching_composition_series, structure_series, verify_identity

__version__ = "0.1.0"
