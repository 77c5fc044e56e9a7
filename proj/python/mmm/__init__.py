"""Matrix-based process analysis (DSM, ISM and the mixed matrix model)."""

from ._mmm import (
    Analysis,
    Clustering,
    Dependency,
    Dsm,
    FeedbackEntry,
    InterdependentPair,
    Ism,
    MmmError,
    ProcessModel,
    SubProcess,
    TriangulationResult,
    analyze,
    assign_levels,
    build_dsm,
    build_ism,
    case_study_fixture,
    classify_feedback,
    cluster_reduced_ism,
    detect_interdependencies,
    feedback_entries,
    find_destination_activities,
    find_original_activities,
    parse_model,
    reduce_ism,
    serialize_model,
    triangulate,
    validate_model,
)

__all__ = [name for name in dir() if not name.startswith("_")]
