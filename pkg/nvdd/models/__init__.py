from nvdd.models.shifting import sector_frame, interior_shift, exterior_shift
from nvdd.models.principles import (ModelKind, PIPELINES, PipelineState, PrincipleInterface,
                                    principle_map, get_principle)
from nvdd.models.anonymizer import (ModelParams, AnonymizationResult, reveals_seed, anonymize,
                                    model_alpha)
