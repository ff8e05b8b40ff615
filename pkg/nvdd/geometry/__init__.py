from nvdd.geometry.primitives import (Point, Line, HalfPlane, direction, perpendicular_bisector,
                                     line_intersect, reflect_across, angle_between)
from nvdd.geometry.polygon import (ConvexPolygon, area, centroid, contains, min_edge_distance,
                                   edge_distances, is_convex_ccw, is_regular, scale_about,
                                   clip_halfplane, clip_many, sample_in_polygon,
                                   monte_carlo_area)
