from nvdd.wire.messages import Query, AnonymizedQuery, PoiResponse
from nvdd.wire.codec import (encode_upstream, decode_upstream, encode_downstream,
                             decode_downstream, anonymize_query)
