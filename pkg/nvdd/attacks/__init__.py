from nvdd.attacks.centroid import CentroidAttackStats, centroid_attack, two_centroid_circle_test
from nvdd.attacks.protocol import feasibility_check, zone_samples, feasible_fraction
from nvdd.attacks.alpha import recover_alpha_center
