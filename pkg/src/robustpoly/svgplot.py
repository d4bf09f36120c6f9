"""Tiny self-contained SVG emitter for the two diagnostic plots."""

from __future__ import annotations

from xml.sax.saxutils import escape


class SvgCanvas:
    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.parts: list[str] = []

    def line(self, x1, y1, x2, y2, stroke="#888", width=1.0, dash=None):
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{stroke}" stroke-width="{width}"{d}/>'
        )

    def circle(self, cx, cy, r, fill="#c22"):
        self.parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r}" fill="{fill}"/>'
        )

    def rect(self, x, y, w, h, stroke="#46a", width=1.0, fill="none"):
        self.parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{w:.2f}" height="{h:.2f}" '
            f'stroke="{stroke}" stroke-width="{width}" fill="{fill}"/>'
        )

    def text(self, x, y, s, size=12, fill="#222", anchor="start"):
        self.parts.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-size="{size}" fill="{fill}" '
            f'text-anchor="{anchor}" font-family="sans-serif">{escape(s)}</text>'
        )

    def render(self) -> str:
        body = "\n".join(self.parts)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n'
            f'<rect width="{self.width}" height="{self.height}" fill="white"/>\n'
            f"{body}\n</svg>\n"
        )


class Panel:
    """Maps data coordinates into a pixel box with simple axes."""

    def __init__(self, canvas, px, py, pw, ph, xlim, ylim, title=""):
        self.c = canvas
        self.px, self.py, self.pw, self.ph = px, py, pw, ph
        self.x0, self.x1 = xlim
        self.y0, self.y1 = ylim
        if self.x1 == self.x0:
            self.x0, self.x1 = self.x0 - 1.0, self.x1 + 1.0
        if self.y1 == self.y0:
            self.y0, self.y1 = self.y0 - 1.0, self.y1 + 1.0
        canvas.rect(px, py, pw, ph, stroke="#bbb")
        if title:
            canvas.text(px + pw / 2, py - 6, title, size=13, anchor="middle")
        # axis cross through the origin where visible
        if self.x0 < 0 < self.x1:
            x = self.mapx(0.0)
            canvas.line(x, py, x, py + ph, stroke="#ddd")
        if self.y0 < 0 < self.y1:
            y = self.mapy(0.0)
            canvas.line(px, y, px + pw, y, stroke="#ddd")

    def mapx(self, x: float) -> float:
        return self.px + (x - self.x0) / (self.x1 - self.x0) * self.pw

    def mapy(self, y: float) -> float:
        return self.py + self.ph - (y - self.y0) / (self.y1 - self.y0) * self.ph

    def dot(self, x, y, r=3.5, fill="#c22"):
        self.c.circle(self.mapx(x), self.mapy(y), r, fill)

    def box(self, x0, x1, y0, y1, stroke="#46a", width=1.0):
        X0, X1 = self.mapx(x0), self.mapx(x1)
        Y0, Y1 = self.mapy(y1), self.mapy(y0)
        self.c.rect(X0, Y0, max(X1 - X0, 0.5), max(Y1 - Y0, 0.5), stroke, width)

    def label(self, x, y, s, size=11, anchor="middle"):
        self.c.text(self.mapx(x), self.mapy(y) - 4, s, size=size, anchor=anchor)

    def corner_ticks(self, n=5):
        self.c.text(self.px, self.py + self.ph + 14, f"{self.x0:.3g}", size=10)
        self.c.text(
            self.px + self.pw,
            self.py + self.ph + 14,
            f"{self.x1:.3g}",
            size=10,
            anchor="end",
        )
        self.c.text(self.px - 4, self.py + self.ph, f"{self.y0:.3g}", size=10, anchor="end")
        self.c.text(self.px - 4, self.py + 10, f"{self.y1:.3g}", size=10, anchor="end")


def roots_figure(rootsets: list[tuple[str, list[complex]]]) -> str:
    """2x2 scatter of four root sets, one panel per polynomial."""
    W, H = 760, 640
    c = SvgCanvas(W, H)
    pw, ph = 320, 250
    slots = [(60, 40), (420, 40), (60, 360), (420, 360)]
    for (name, rs), (px, py) in zip(rootsets, slots):
        if rs:
            xs = [r.real for r in rs]
            ys = [r.imag for r in rs]
            mx = max(max(map(abs, xs)), 0.5) * 1.2
            my = max(max(map(abs, ys)), 0.5) * 1.2
            xlim = (min(xs) - 0.15 * mx - 0.2, max(max(xs) + 0.15 * mx, 0.0) + 0.2)
            ylim = (-my, my)
        else:
            xlim, ylim = (-1, 1), (-1, 1)
        panel = Panel(c, px, py, pw, ph, xlim, ylim, title=name)
        panel.corner_ticks()
        for r in rs:
            panel.dot(r.real, r.imag)
            panel.label(r.real, r.imag, f"{r.real:.2f}{r.imag:+.2f}i", size=9)
    return c.render()


def rectangles_figure(samples, highlight_index: int | None = None) -> str:
    """Trajectory of value-set rectangles over frequency, corners tagged."""
    W, H = 720, 560
    c = SvgCanvas(W, H)
    if not samples:
        c.text(W / 2, H / 2, "no samples", anchor="middle")
        return c.render()
    xs = [v for s in samples for v in s.x_range]
    ys = [v for s in samples for v in s.y_range]
    padx = 0.06 * (max(xs) - min(xs) or 1.0)
    pady = 0.06 * (max(ys) - min(ys) or 1.0)
    panel = Panel(
        c,
        70,
        40,
        W - 120,
        H - 110,
        (min(xs) - padx, max(xs) + padx),
        (min(ys) - pady, max(ys) + pady),
        title="value-set rectangles",
    )
    panel.corner_ticks()
    step = max(1, len(samples) // 48)
    for s in samples[::step]:
        panel.box(s.x_range[0], s.x_range[1], s.y_range[0], s.y_range[1], stroke="#9bc")
    hi = samples[highlight_index if highlight_index is not None else len(samples) // 2]
    panel.box(hi.x_range[0], hi.x_range[1], hi.y_range[0], hi.y_range[1], stroke="#146", width=2.0)
    names = ("k1", "k2", "k3", "k4")
    for name, corner in zip(names, hi.corners):
        panel.dot(corner.real, corner.imag, r=3, fill="#146")
        panel.label(corner.real, corner.imag, name, size=11)
    c.text(70, H - 30, f"omega from {samples[0].omega:.3g} to {samples[-1].omega:.3g}", size=11)
    c.text(
        70,
        H - 14,
        f"labeled rectangle at omega = {hi.omega:.6g}",
        size=11,
    )
    return c.render()
