from enum import Enum


class ProcessKind(Enum):
    GPP = "gpp"
    VGPP = "vgpp"
