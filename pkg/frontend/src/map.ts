// Live map rendering on a plain 2D canvas: grid, trail, pose, objects.

import type { MapModel, Pose, SceneObjectInfo } from './types.js';

export interface Canvas2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  fillRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  font: string;
  fillText(text: string, x: number, y: number): void;
}

const COLORS = {
  free: '#f4f4ef',
  occupied: '#3c3c46',
  trail: '#4287f5',
  robot: '#dc3c3c',
  object: '#28a05a',
};

export interface MapViewport {
  cellPx: number;
  widthPx: number;
  heightPx: number;
  toPx(x: number, y: number): [number, number];
}

export function viewport(map: MapModel, targetWidthPx = 480): MapViewport {
  const cols = map.rows[0]?.length ?? 1;
  const rows = map.rows.length;
  const cellPx = Math.max(2, Math.floor(targetWidthPx / cols));
  const widthPx = cols * cellPx;
  const heightPx = rows * cellPx;
  const toPx = (x: number, y: number): [number, number] => {
    const col = (x - map.origin[0]) / map.resolution;
    const row = (y - map.origin[1]) / map.resolution;
    return [col * cellPx, heightPx - row * cellPx]; // canvas y grows downward
  };
  return { cellPx, widthPx, heightPx, toPx };
}

export function drawMap(
  ctx: Canvas2D,
  map: MapModel,
  view: MapViewport,
  trail: Pose[],
  pose: Pose | null,
  objects: SceneObjectInfo[],
): void {
  ctx.fillStyle = COLORS.free;
  ctx.fillRect(0, 0, view.widthPx, view.heightPx);

  ctx.fillStyle = COLORS.occupied;
  map.rows.forEach((row, topIndex) => {
    for (let col = 0; col < row.length; col += 1) {
      if (row[col] === '#') {
        ctx.fillRect(col * view.cellPx, topIndex * view.cellPx, view.cellPx, view.cellPx);
      }
    }
  });

  ctx.strokeStyle = COLORS.object;
  ctx.lineWidth = 2;
  for (const obj of objects) {
    const [cx, cy] = view.toPx(obj.x, obj.y);
    ctx.beginPath();
    ctx.arc(cx, cy, view.cellPx, 0, Math.PI * 2);
    ctx.stroke();
    ctx.font = '10px sans-serif';
    ctx.fillStyle = COLORS.object;
    ctx.fillText(obj.label, cx + view.cellPx + 2, cy);
  }

  if (trail.length >= 2) {
    ctx.strokeStyle = COLORS.trail;
    ctx.lineWidth = 2;
    ctx.beginPath();
    const [x0, y0] = view.toPx(trail[0].x, trail[0].y);
    ctx.moveTo(x0, y0);
    for (const p of trail.slice(1)) {
      const [x, y] = view.toPx(p.x, p.y);
      ctx.lineTo(x, y);
    }
    ctx.stroke();
  }

  if (pose) {
    const [cx, cy] = view.toPx(pose.x, pose.y);
    const r = view.cellPx * 1.2;
    ctx.strokeStyle = COLORS.robot;
    ctx.lineWidth = 3;
    ctx.beginPath();
    ctx.arc(cx, cy, r, 0, Math.PI * 2);
    ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(cx, cy);
    ctx.lineTo(cx + r * 1.5 * Math.cos(pose.theta), cy - r * 1.5 * Math.sin(pose.theta));
    ctx.stroke();
  }
}
