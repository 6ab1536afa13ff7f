from vgpp_pricing.domain.reports.calibration_report import CalibrationReport
from vgpp_pricing.domain.reports.exotic_report import ContractKind, ExoticPoint, ExoticReport, LadderPoint
from vgpp_pricing.domain.reports.moment_summary import MomentSummary
from vgpp_pricing.domain.reports.price_report import PriceMethod, PriceReport, TriangleCell, TriangleReport
from vgpp_pricing.domain.reports.process_kind import ProcessKind
from vgpp_pricing.domain.reports.report_codec import (
    SCHEMA_VERSION,
    report_from_dict,
    report_from_json,
    report_to_json,
)
from vgpp_pricing.domain.reports.simulation_report import MarginalSummary, MultiSimulationReport, SimulationReport

__all__ = [
    "SCHEMA_VERSION",
    "ProcessKind",
    "PriceMethod",
    "ContractKind",
    "MomentSummary",
    "SimulationReport",
    "MarginalSummary",
    "MultiSimulationReport",
    "PriceReport",
    "TriangleCell",
    "TriangleReport",
    "CalibrationReport",
    "ExoticPoint",
    "LadderPoint",
    "ExoticReport",
    "report_to_json",
    "report_from_dict",
    "report_from_json",
]
