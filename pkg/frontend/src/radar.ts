/**
 * Radar comparison of the team profile against a strategy's demands.
 *
 * One axis per active attribute, two overlaid polygons. A single-attribute
 * mask degenerates to a two-bar comparison instead of a polygon.
 */

export interface RadarAxis {
  attribute: string;
  angle: number;
  team: number;
  strategy: number;
}

export interface RadarPoint {
  x: number;
  y: number;
}

export interface RadarView {
  axes: RadarAxis[];
  teamPolygon: RadarPoint[];
  strategyPolygon: RadarPoint[];
  degenerate: boolean;
}

function polar(angle: number, radius: number): RadarPoint {
  return { x: radius * Math.cos(angle), y: radius * Math.sin(angle) };
}

export function buildRadarView(
  team: Record<string, number>,
  strategy: Record<string, number>,
  mask: string[],
): RadarView {
  if (mask.length === 0) {
    throw new Error('radar mask must name at least one attribute');
  }
  const n = mask.length;
  const axes = mask.map((attribute, i) => ({
    attribute,
    angle: (2 * Math.PI * i) / n - Math.PI / 2,
    team: team[attribute],
    strategy: strategy[attribute],
  }));
  return {
    axes,
    teamPolygon: axes.map((a) => polar(a.angle, a.team)),
    strategyPolygon: axes.map((a) => polar(a.angle, a.strategy)),
    degenerate: n === 1,
  };
}

function points(polygon: RadarPoint[], center: number, radius: number): string {
  return polygon
    .map((p) => `${(center + p.x * radius).toFixed(2)},${(center + p.y * radius).toFixed(2)}`)
    .join(' ');
}

export function renderRadarSvg(view: RadarView, size = 320): string {
  const center = size / 2;
  const radius = size * 0.4;
  if (view.degenerate) {
    const axis = view.axes[0];
    const scale = (v: number) => (v * (size - 80)).toFixed(2);
    return `
  <svg class="radar degenerate" viewBox="0 0 ${size} 120" role="img">
    <text x="8" y="20">${axis.attribute}</text>
    <rect class="team" x="8" y="30" width="${scale(axis.team)}" height="24"></rect>
    <rect class="strategy" x="8" y="62" width="${scale(axis.strategy)}" height="24"></rect>
  </svg>`;
  }
  const spokes = view.axes
    .map((a) => {
      const end = polar(a.angle, 1);
      const lx = center + end.x * radius;
      const ly = center + end.y * radius;
      const tx = center + end.x * (radius + 16);
      const ty = center + end.y * (radius + 16);
      return `
    <line class="axis" x1="${center}" y1="${center}" x2="${lx.toFixed(2)}" y2="${ly.toFixed(2)}"></line>
    <text class="axis-label" x="${tx.toFixed(2)}" y="${ty.toFixed(2)}">${a.attribute}</text>`;
    })
    .join('');
  return `
  <svg class="radar" viewBox="0 0 ${size} ${size}" role="img">
    ${spokes}
    <polygon class="team" points="${points(view.teamPolygon, center, radius)}"></polygon>
    <polygon class="strategy" points="${points(view.strategyPolygon, center, radius)}"></polygon>
  </svg>`;
}
