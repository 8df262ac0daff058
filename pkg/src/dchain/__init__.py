"""Straight-line embeddings of 2-colored paths, caterpillars and star forests
on 2-colored double-chains, with an exhaustive oracle for small instances."""

from dchain.geometry import Point, Segment, orientation, path_is_noncrossing, segments_properly_cross
from dchain.chains import Chain, ChainStats, Coloring, DoubleChain, compute_stats, generate_double_chain
from dchain.nhap import PathEmbedding, embed_nhap

__all__ = [
    "Chain",
    "ChainStats",
    "Coloring",
    "DoubleChain",
    "PathEmbedding",
    "Point",
    "Segment",
    "compute_stats",
    "embed_nhap",
    "generate_double_chain",
    "orientation",
    "path_is_noncrossing",
    "segments_properly_cross",
]

__version__ = "0.1.0"
