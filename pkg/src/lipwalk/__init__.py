"""Average range of (strong) M-Lipschitz mappings of rooted graphs, in exact arithmetic."""

from .closed_forms import (
    avg1_complete,
    avg1_complete_bipartite,
    avg1_cycle,
    avg1_path,
    avg1_star,
    avg_strong1_star,
    count1_complete_bipartite,
    count1_cycle,
    count1_unicyclic,
    cycle_avg_asymptotic,
)
from .combinatorics import (
    binomial,
    central_trinomial,
    format_rational,
    irregular_trinomial,
    motzkin,
    path_endpoint_probability,
    trinomial,
)
from .errors import (
    InvalidArgumentError,
    InvalidOrderError,
    LipwalkError,
    TransformNotApplicableError,
    UndefinedAverageError,
)
from .graphs import (
    RootedGraph,
    classify,
    kc_transform,
    make_complete,
    make_complete_bipartite,
    make_corolla,
    make_cycle,
    make_path,
    make_star,
    side_vertices,
)
from .lipschitz import STRONG1, WEAK1, Mode, avg_range_bruteforce, enumerate_mappings, mapping_stats, range_of

__version__ = "0.1.0"
