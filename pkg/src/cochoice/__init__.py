"""Exact inference with coherent choice functions and sets of desirable gamble sets."""

from .choice import (BinarityReport, BinaryWitness, ChoiceResult, Engine,
                     Selection, Verdict, binarity_evidence, choose, consistent,
                     natex_contains, reject, singleton_desirable)
from .desirability import DesirGenerators, cone_contains, is_coherent, kd_contains
from .errors import (CertificateError, CochoiceError, DimensionMismatch,
                     IncoherentGenerators, InconsistentAssessment, ParseError,
                     SelectionCapExceeded)
from .gambles import (Assessment, Gamble, GambleSet, PossibilitySpace,
                      is_nonpositive, is_strictly_positive, shift_set,
                      strip_nonpositive)
from .operators import (PosiCertificate, produced_set, rn_member, rs_step,
                        su_member, verify_membership_certificate)

__version__ = "0.1.0"
