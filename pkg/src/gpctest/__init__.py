"""Testing whether the copula of multivariate or grid-observed functional
data lies in a neighborhood of a generalized Pareto copula.

The pipeline: draw or load data, count exceedances over the threshold
ladder 1 - c/j, form the quadratic statistic, and compare against the
weighted chi-square limit law.  Samplers for all the copula families used
in the experiments, the limit law (with characteristic-function inversion
and a Monte Carlo oracle), and a reproducible simulation harness are
included.
"""

from . import copulas, dnorms, exceedance, harness, limitdist, processes, statistic
from .copulas import (
    CopulaModel,
    Truth,
    clayton_model,
    gumbel_model,
    normal_model,
    sample_clayton,
    sample_gumbel,
    sample_normal_copula,
    sample_sinelog_copula,
    sinelog_cdf,
    sinelog_margin_cdf,
    sinelog_model,
    sinelog_quantile,
    tail_integral_ratio,
)
from .dnorms import (
    DNorm,
    dnorm_l1,
    dnorm_logistic,
    dnorm_split_uniform,
    dnorm_sup,
    dnorm_two_uniforms,
)
from .exceedance import (
    ExceedanceCounts,
    count_exceedances,
    count_exceedances_empirical,
    count_exceedances_process,
    default_subset_size,
)
from .harness import (
    ExperimentConfig,
    PValueCurve,
    pvalue_curve,
    quantile_plot_points,
    run_replicated_test,
    run_single_test,
)
from .limitdist import (
    WeightedChiSquareLaw,
    eigenvalues,
    mc_cdf,
    noncentral_law,
    noncentrality,
    null_law,
    p_value,
)
from .processes import GridSpec, ProcessModel, ProcessSample, process_margin_cdf, sample_pareto_process
from .statistic import (
    DegenerateSampleError,
    TestReport,
    estimate_extremal_coefficient,
    t_statistic,
)

__version__ = "0.1.0"
