"""Persistent homology of filtered complexes, Z_k-equivariant persistence, and capacities."""
from .algebra import FieldSpec, add_scaled, field_arith, format_extended, low, parse_extended
from .builders import (
    VertexFunction, bipyramid_sphere, grid_sublevel, lower_star, octahedron, polygon_circle,
    symmetric_fixture,
)
from .complex import Cell, FilteredComplex, WindowSpec, relative_complex, snapshot, validate
from .equivariant import (
    GroupAction, borel_complex, equivariant_capacity, equivariant_persist, equivariant_windowed,
    validate_action,
)
from .metrics import bottleneck
from .modules import (
    ModuleSummary, SurrogateSpec, auto_spec, capacity, relative_module, surrogate_module,
    vanishing_classes,
)
from .persistence import (
    HomologyClass, PersistenceDiagram, class_persistence, diagram, persistent_betti, reduce,
    strict_bracket, windowed_homology,
)

__version__ = "0.1.0"
