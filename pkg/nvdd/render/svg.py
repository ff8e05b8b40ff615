"""Construct SVG scenes of polygons.

Add items in world coordinates (meters) to a Scene, then write it out. The
scene fits everything it holds into the canvas, flipping y so that north is
up, and prints every coordinate with a fixed number of decimals so the same
scene always gives the same bytes.
"""
import logging

logger = logging.getLogger(__name__)

NUMBER_FORMAT = '{:.3f}'


def colorstr(rgb):
    if isinstance(rgb, tuple):
        return "#%02x%02x%02x" % rgb
    return rgb


def compute_style(style):
    style_str = []
    color = style.get("color", "none")
    if color is not None:
        style_str.append('fill:%s' % (colorstr(color),))
    stroke = style.get("stroke")
    if stroke is not None:
        style_str.append('stroke:%s' % (colorstr(stroke),))
    opacity = style.get("opacity")
    if opacity is not None:
        style_str.append('fill-opacity:%s' % (opacity,))
    return 'style="%s"' % (';'.join(style_str),)


def fmt(value):
    text = NUMBER_FORMAT.format(value)
    # avoid "-0.000"
    return '0.000' if text == '-0.000' else text


class Transform(object):
    """World to canvas mapping that keeps the aspect ratio"""

    def __init__(self, bounds, size, margin):
        xmin, ymin, xmax, ymax = bounds
        width = max(xmax - xmin, 1e-12)
        height = max(ymax - ymin, 1e-12)
        self.scale = min((size[0] - 2 * margin) / width, (size[1] - 2 * margin) / height)
        self.xmin = xmin
        self.ymax = ymax
        self.margin = margin

    def __call__(self, p):
        return (self.margin + (p[0] - self.xmin) * self.scale,
                self.margin + (self.ymax - p[1]) * self.scale)


class Polygon(object):
    def __init__(self, points, name=None, **style_kwargs):
        self.points = [(float(p[0]), float(p[1])) for p in points]
        self.name = name
        self.style_kwargs = style_kwargs

    def bounds(self):
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    def point_string(self, transform):
        return ' '.join('{},{}'.format(*map(fmt, transform(p))) for p in self.points)

    def strarray(self, transform):
        name = 'id="%s" ' % self.name if self.name else ''
        return ['  <polygon %spoints="%s" %s />\n' % (
            name, self.point_string(transform), compute_style(self.style_kwargs))]


class Dot(object):
    """A marker of fixed canvas radius at a world point"""

    def __init__(self, center, radius=3, name=None, **style_kwargs):
        self.center = (float(center[0]), float(center[1]))
        self.radius = radius
        self.name = name
        self.style_kwargs = style_kwargs

    def bounds(self):
        return self.center[0], self.center[1], self.center[0], self.center[1]

    def strarray(self, transform):
        cx, cy = transform(self.center)
        name = 'id="%s" ' % self.name if self.name else ''
        return ['  <circle %scx="%s" cy="%s" r="%s" %s />\n' % (
            name, fmt(cx), fmt(cy), fmt(self.radius), compute_style(self.style_kwargs))]


class Scene(object):
    def __init__(self, size=(400, 400), margin=10):
        self.items = []
        self.size = size
        self.margin = margin

    def add(self, item):
        self.items.append(item)
        return item

    def bounds(self):
        boxes = [item.bounds() for item in self.items]
        if not boxes:
            return 0.0, 0.0, 1.0, 1.0
        return (min(b[0] for b in boxes), min(b[1] for b in boxes),
                max(b[2] for b in boxes), max(b[3] for b in boxes))

    def strarray(self):
        transform = Transform(self.bounds(), self.size, self.margin)
        var = [
            '<?xml version="1.0"?>\n',
            '<svg xmlns="http://www.w3.org/2000/svg" height="%d" width="%d">\n' % (
                self.size[1], self.size[0]),
            ' <g style="stroke:black; stroke-width:1;">\n',
        ]
        for item in self.items:
            var += item.strarray(transform)
        var += [' </g>\n</svg>\n']
        return var

    def to_string(self):
        return ''.join(self.strarray())

    def write_svg(self, file):
        file.writelines(self.strarray())


def result_scene(res, size=(400, 400)):
    """Delaunay polygon, shifted Voronoi cell and anonymity zone of res, seed marked"""
    scene = Scene(size=size)
    scene.add(Polygon(res.instance.delaunay.vertices, name='delaunay', color='none',
                      stroke=(90, 90, 90)))
    scene.add(Polygon(res.instance.voronoi.vertices, name='voronoi', color=(173, 216, 230),
                      stroke=(0, 0, 160), opacity=0.5))
    scene.add(Polygon(res.zone.polygon.vertices, name='zone', color=(255, 165, 0),
                      stroke=(200, 80, 0), opacity=0.6))
    scene.add(Dot(res.seed, name='seed', color=(200, 0, 0), stroke=None))
    return scene
