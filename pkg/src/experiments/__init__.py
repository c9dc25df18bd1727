from src.experiments.experiment import Experiment, ExperimentResult
from src.experiments.runners import BSExperiment, PoissonExperiment, SpectralExperiment, MTPExperiment
