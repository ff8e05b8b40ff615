from nvdd.render.svg import Scene, Polygon, Dot, result_scene
