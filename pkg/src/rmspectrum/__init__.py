"""Weight spectra of Reed-Muller codes RM(m-6, m) via four-block concatenations."""

from .boolfn import (
    ZERO_DEGREE,
    Anf,
    AnfSyntaxError,
    Monomial,
    TruthTable,
    add,
    anf_to_table,
    complement,
    concat2,
    concat4,
    degree,
    parse_anf,
    table_to_anf,
    weight,
)
from .constructions import (
    ConstructionSpec,
    catalog_witnesses,
    construction1,
    construction1_flipped,
    construction2,
    lemma1_concat,
    paper_witnesses,
)
from .enumeration import WeightHistogram, conjecture2_check, enumerate_construction2
from .formulas import (
    IntersectionProfile,
    oracle_weight,
    profile_of,
    three_monomial_weight,
    three_monomial_weight_set,
    two_monomial_weight,
    two_monomial_weight_set,
)
from .search import find_witness
from .spectrum import (
    SpectrumSet,
    assemble_rm6_12_achieved,
    conjecture1_shape,
    kasami_range1_weights,
    lemma8_witnesses,
    predicted_spectrum,
    rm6_12_low_set,
    theorem2_induction_step,
)

__version__ = "0.1.0"
