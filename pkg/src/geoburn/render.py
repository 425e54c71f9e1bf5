"""Dependency-free SVG rendering of instances and schedules.

The drawing is byte-deterministic: same inputs, same string.  Points are
dots, ignition sources are crosses labelled with their ignition step,
and each source ignited at step i carries a fire-front circle of radius
rate * (step - i) for the displayed step (the schedule's final step when
none is given).
"""

from __future__ import annotations

from .core import BurnSchedule, Instance

__all__ = ["render_svg"]

_CANVAS = 640.0
_PAD = 24.0


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def render_svg(
    inst: Instance,
    schedule: BurnSchedule | None = None,
    step: int | None = None,
) -> str:
    if step is None:
        step = schedule.total_steps if schedule is not None else 0
    fronts: list[tuple[float, float, float]] = []  # x, y, radius
    crosses: list[tuple[float, float, int]] = []  # x, y, ignition step
    if schedule is not None:
        for src in schedule.sources:
            crosses.append((src.center.x, src.center.y, src.step))
            if src.step <= step:
                radius = src.rate * (step - src.step)
                if radius > 0:
                    fronts.append((src.center.x, src.center.y, radius))

    xs = [p.x for p in inst.points] + [c[0] for c in crosses]
    ys = [p.y for p in inst.points] + [c[1] for c in crosses]
    for cx, cy, r in fronts:
        xs.extend((cx - r, cx + r))
        ys.extend((cy - r, cy + r))
    if not xs:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" width="64" height="64" '
            'viewBox="0 0 64 64"></svg>\n'
        )

    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    extent = max(max_x - min_x, max_y - min_y, 1e-9)
    scale = (_CANVAS - 2 * _PAD) / extent

    def sx(x: float) -> float:
        return _PAD + (x - min_x) * scale

    def sy(y: float) -> float:
        # SVG's y axis points down; flip so the plane reads normally.
        return _PAD + (max_y - y) * scale

    width = 2 * _PAD + (max_x - min_x) * scale
    height = 2 * _PAD + (max_y - min_y) * scale
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    ]
    for cx, cy, r in fronts:
        out.append(
            f'<circle cx="{_fmt(sx(cx))}" cy="{_fmt(sy(cy))}" r="{_fmt(r * scale)}" '
            'fill="none" stroke="#d62728" stroke-width="1.5"/>'
        )
    for pt in inst.points:
        out.append(
            f'<circle cx="{_fmt(sx(pt.x))}" cy="{_fmt(sy(pt.y))}" r="3" fill="#1f2430"/>'
        )
    arm = 6.0
    for cx, cy, ignition in crosses:
        x, y = sx(cx), sy(cy)
        out.append(
            f'<path d="M {_fmt(x - arm)} {_fmt(y)} H {_fmt(x + arm)} '
            f'M {_fmt(x)} {_fmt(y - arm)} V {_fmt(y + arm)}" '
            'stroke="#d62728" stroke-width="2" fill="none"/>'
        )
        out.append(
            f'<text x="{_fmt(x + arm + 2)}" y="{_fmt(y - 2)}" '
            f'font-size="11" font-family="monospace" fill="#d62728">{ignition}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
