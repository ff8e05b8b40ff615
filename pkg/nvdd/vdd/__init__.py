from nvdd.vdd.structure import (SectorFrame, VddInstance, AnonymityZone, regular_delaunay,
                                delaunay_on_frame, voronoi_from_delaunay, delaunay_from_voronoi,
                                frame_from_delaunay, strips, anonymity_zone)
