from nvdd.metrics.costs import (CostReport, concealing_cost, privacy_level,
                                expected_privacy_level, upstream_bytes_vdd, downstream_bytes,
                                upstream_bytes_ncd, expected_poi_count, cost_report)
