from nvdd.sim.records import (SweepRecord, ComparisonRecord, comparison_rows, write_records_csv,
                              write_attack_csv)
from nvdd.sim.sweep import (SweepConfig, draw_location, run_cell, run_sweep, run_attack_stats,
                            run_ncd_cell, run_comparison, edge_shift_distances)
