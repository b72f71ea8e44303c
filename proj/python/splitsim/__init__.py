"""Coverage simulator for n disk agents sharing a fixed total footprint."""

from ._splitsim import (  # noqa: F401
    CollisionParams,
    ConfigError,
    CoverageGrid,
    FailureParams,
    Mode,
    ProfileKind,
    RunResult,
    SimConfig,
    SweepSpec,
    VelocityProfile,
    WalkParams,
    cells_in_disk,
    disk_overlap_area,
    expected_survivor_fraction,
    failure_rate,
    ideal_teleport_increment,
    initial_rate,
    optimal_n_linear,
    parse_config,
    parse_config_text,
    radius_from_split,
    run_sweep,
    simulate,
    summarize,
    torus_delta,
    velocity,
    wrap_position,
    write_csv,
)

__version__ = "0.1.0"
