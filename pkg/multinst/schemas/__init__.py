from multinst.schemas.core import (
    ClassLabel, LogOdds, ScoredInstance, SoftLabel, Threshold, WeightedInstance,
)
from multinst.schemas.dataset import ScoredDataset, SoftLabelBatch, WeightedDataset
from multinst.schemas.stats import ClassMoments, MomentsReport, RocPoint
from multinst.schemas.analytic import AucPoint, OptimalThreshold, RatePrediction
from multinst.schemas.synth import McEstimate, SimulationRow, SynthConfig
from multinst.schemas.train import EpochRecord, ScorerModel, TrainConfig, TrainTrace

__all__ = [
    "ClassLabel", "LogOdds", "ScoredInstance", "SoftLabel", "Threshold", "WeightedInstance",
    "ScoredDataset", "SoftLabelBatch", "WeightedDataset",
    "ClassMoments", "MomentsReport", "RocPoint",
    "AucPoint", "OptimalThreshold", "RatePrediction",
    "McEstimate", "SimulationRow", "SynthConfig",
    "EpochRecord", "ScorerModel", "TrainConfig", "TrainTrace",
]
