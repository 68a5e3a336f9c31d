"""Exact lattice and moduli computations for sheaves on K3 and Abelian surfaces.

The package covers integral lattices (Smith and Hermite normal forms,
signatures, discriminant groups, orthogonal complements), Mukai vectors and
their orthogonal lattices, walls for v-genericity of polarizations, a case
table for the moduli spaces M_v and K_v, Fujiki constants and strata
dimensions. All arithmetic is exact.
"""

__version__ = "0.1.0"

from .errors import ConfigError, DomainError, MukaiError, UnsupportedError
from .lattice import (
    E8_GRAM,
    DiscriminantGroup,
    Lattice,
    Signature,
    determinant,
    direct_sum,
    discriminant_group,
    divisibility,
    hermite_normal_form,
    integer_kernel,
    is_primitive,
    orthogonal_complement,
    primitive_scale,
    signature,
    smith_normal_form,
    standard_lattice,
    twist,
)
from .mukai import (
    MukaiVector,
    Positivity,
    SurfaceKind,
    SurfaceModel,
    algebraic_vperp,
    default_embedding,
    embed_mukai_vector,
    h2_lattice,
    is_positive_mukai_vector,
    mukai_from_chern,
    mukai_lattice,
    mukai_pairing,
    vperp_abstract,
    vperp_explicit,
)
from .walls import (
    AmpleSegment,
    GenericityResult,
    GenericityStatus,
    Wall,
    WallSource,
    canonical_sign,
    check_wall_inclusion,
    enumerate_walls,
    is_v_generic,
    v_norm_bound,
)
from .fujiki import (
    FujikiValue,
    Space,
    StratumCase,
    StratumRow,
    StratumTable,
    fujiki_K,
    fujiki_known,
    fujiki_M,
    lambda_scaling,
    psi_degree,
    strata_dimensions,
)
from .classify import (
    DeformationClass,
    Factoriality,
    ModuliClass,
    ModuliReport,
    Singularities,
    beauville_lattice,
    classify,
    moduli_dim,
)
