"""Rigged configurations, B^{1,1} crystal paths and the X = M identity
for affine types A_n^(1) and D_n^(1)."""

from .qseries import LaurentPoly, add, mul, invert_q, eval_at_one, q_binomial
from .partitions import (
    Partition,
    size,
    multiplicity,
    column_count,
    partitions_in_box,
    complement_in_box,
)
from .crystal import (
    CartanType,
    TensorSpec,
    Path,
    letter_weight,
    f_letter,
    e_letter,
    eps_phi_letter,
    e_path,
    f_path,
    is_classically_highest,
    enumerate_paths,
    parse_weight,
)
from .energy import local_energy, energy, energy_su2, one_dim_sum
from .rigged import (
    Configuration,
    RiggedConfiguration,
    cartan_pairing,
    vacancy,
    weight_of_configuration,
    is_admissible,
    cocharge_config,
    cocharge,
    enumerate_configurations,
    enumerate_rc,
    fermionic_M,
    complement,
)
from .xxx import StringConfiguration, p_ell, count_for_configuration, count_total
from .bijection import (
    DeltaResult,
    delta,
    delta_A,
    delta_D,
    phi,
    phi_tilde,
    psi_su2,
    rc_from_path,
)

__version__ = "0.1.0"
