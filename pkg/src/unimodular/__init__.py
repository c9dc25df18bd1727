from src.unimodular.mtp import (
    RootedGraph,
    RootedMeasure,
    TransportFunction,
    MTPReport,
    mtp_check,
    uniformly_rooted,
    rooted_measure_from_dict,
)
from src.unimodular.transports import TRANSPORTS, get_transport
from src.unimodular.shift import (
    ShiftMeasure,
    BernoulliShift,
    MarkovShift,
    PeriodicShift,
    BlockSystem,
    ReweightedLaw,
    PointedSequence,
    ShiftMTPReport,
    reweight,
    sample_pointed_sequence,
    sample_pointed_sequences,
    shift_mtp_check,
    window_graph,
    window_volume,
)
