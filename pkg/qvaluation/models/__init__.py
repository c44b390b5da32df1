""" Contains all the report and record models used in inputs/outputs """

from .biconditional_report import BiconditionalReport
from .consistency_report import ConsistencyReport
from .distributivity_report import DistributivityReport
from .gap_statistics import GapStatistics
from .logic_report import LogicReport
from .overdetermination_report import OverdeterminationReport
from .problem import Problem
from .run_config import RunConfig
from .valuation_report import ValuationReport
from .walkthrough_report import Check, WalkthroughReport

__all__ = (
    "BiconditionalReport",
    "Check",
    "ConsistencyReport",
    "DistributivityReport",
    "GapStatistics",
    "LogicReport",
    "OverdeterminationReport",
    "Problem",
    "RunConfig",
    "ValuationReport",
    "WalkthroughReport",
)
