// Canvas painting: the simulated pin grid plus the snapshot diff overlay.

import type { Editor } from "./state.js";

export const CELL = 22;

export function paintGrid(canvas: HTMLCanvasElement, editor: Editor): void {
  const { width, height } = editor.scene.grid;
  canvas.width = width * CELL;
  canvas.height = height * CELL;
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.fillStyle = "#f4f1ea";
  ctx.fillRect(0, 0, canvas.width, canvas.height);

  // pins drawn as circles at their true physical proportion so the view
  // matches the tactile layout density
  const proportion = editor.view.physicalDots
    ? editor.view.dotWidthMm / editor.view.pitchMm
    : 0.85;
  const radius = (CELL * proportion) / 2;

  for (let y = 0; y < height; y++) {
    for (let x = 0; x < width; x++) {
      const cx = x * CELL + CELL / 2;
      const cy = y * CELL + CELL / 2;
      ctx.beginPath();
      ctx.arc(cx, cy, radius, 0, Math.PI * 2);
      if (editor.pixelOn([x, y])) {
        ctx.fillStyle = "#2b2b2b";
        ctx.fill();
      } else {
        ctx.strokeStyle = "#d8d2c4";
        ctx.lineWidth = 1;
        ctx.stroke();
      }
    }
  }

  const diff = editor.diffView;
  if (diff) {
    ctx.lineWidth = 2.5;
    for (const [x, y] of diff.added) {
      ctx.strokeStyle = "#2e7d32";
      ctx.beginPath();
      ctx.arc(x * CELL + CELL / 2, y * CELL + CELL / 2, radius + 3, 0, Math.PI * 2);
      ctx.stroke();
    }
    for (const [x, y] of diff.removed) {
      ctx.strokeStyle = "#c62828";
      ctx.beginPath();
      ctx.arc(x * CELL + CELL / 2, y * CELL + CELL / 2, radius + 3, 0, Math.PI * 2);
      ctx.stroke();
    }
  }

  const highlight = editor.selection;
  if (highlight !== null) {
    const summary = editor.renders.find((r) => r.item === highlight);
    if (summary) {
      ctx.strokeStyle = "#1565c0";
      ctx.lineWidth = 1.5;
      for (const [vx, vy] of summary.vertices) {
        ctx.strokeRect(vx * CELL + 2, vy * CELL + 2, CELL - 4, CELL - 4);
      }
    }
  }
}

export function canvasCell(
  canvas: HTMLCanvasElement,
  event: MouseEvent,
): [number, number] {
  const rect = canvas.getBoundingClientRect();
  const x = Math.floor(((event.clientX - rect.left) / rect.width) * canvas.width / CELL);
  const y = Math.floor(((event.clientY - rect.top) / rect.height) * canvas.height / CELL);
  return [x, y];
}
