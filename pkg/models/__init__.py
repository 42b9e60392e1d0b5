from .series import LaurentTerm, QSymTerm
from .flats import FlatsFile
from .cd_report import CDMethod, CDReport, CDRoute, Variant
from .matroid import CharacterRow, FlagEntry, MatroidReport
from .verify import CheckOutcome, SuiteName, VerifyReport

__all__ = [
    # series
    "LaurentTerm",
    "QSymTerm",
    # flats
    "FlatsFile",
    # cd
    "CDMethod",
    "CDReport",
    "CDRoute",
    "Variant",
    # matroid
    "CharacterRow",
    "FlagEntry",
    "MatroidReport",
    # verify
    "CheckOutcome",
    "SuiteName",
    "VerifyReport",
]
