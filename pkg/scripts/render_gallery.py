"""Render an SVG gallery: full circles at several radii, plus a quadrant
comparison of the constructed path against the midpoint rasterizer."""

import argparse
import pathlib

from latticircle.reference import midpoint_quadrant
from latticircle.signum import assemble_full_circle, generate_quadrant
from latticircle.svg import render_path_svg

FULL_RADII = (5, 10, 15, 20, 25, 30)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="out/gallery")
    ap.add_argument("--compare-radius", type=int, default=15)
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for r in FULL_RADII:
        circle = assemble_full_circle(generate_quadrant(r))
        svg = render_path_svg(circle.points, r, closed=True, overlay_circle=True)
        (out_dir / f"circle_r{r}.svg").write_text(svg, encoding="utf-8")

    r = args.compare_radius
    quadrant = generate_quadrant(r)
    (out_dir / f"quadrant_signum_r{r}.svg").write_text(
        render_path_svg(quadrant.points, r, overlay_circle=True), encoding="utf-8"
    )
    # the midpoint octant mirror double-emits its seam points, so this one
    # fails the validity check that the constructed path passes
    (out_dir / f"quadrant_midpoint_r{r}.svg").write_text(
        render_path_svg(midpoint_quadrant(r), r, overlay_circle=True), encoding="utf-8"
    )
    print(f"wrote {len(FULL_RADII) + 2} files to {out_dir}")


if __name__ == "__main__":
    main()
