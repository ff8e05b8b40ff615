from nvdd.ncd.disks import (Disk, DiskSet, generate_ncd, circumscribed_polygon,
                            intersection_polygon, union_outline, ncd_costs)
