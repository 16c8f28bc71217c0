import type { SweepResponse } from "./types.js";

// Sweep overlay geometry: observed solid, null mean dashed, with breaks at
// undefined values and a cursor tracking the threshold slider.

export interface ChartLine {
  points: [number, number][];
  dashed: boolean;
  series: "observed" | "null";
}

export interface ChartPoint {
  x: number;
  y: number;
  series: "observed" | "null";
}

export interface SweepChart {
  width: number;
  height: number;
  lines: ChartLine[];
  points: ChartPoint[]; // isolated defined values between breaks
  cursorX: number;
  empty: boolean; // true when no transitivity is defined anywhere
  xOf(t: number): number;
  yOf(v: number): number;
}

const PAD = { left: 36, right: 10, top: 8, bottom: 22 };

function runs(values: (number | null)[]): [number, number][][] {
  const out: [number, number][][] = [];
  let run: [number, number][] = [];
  values.forEach((v, i) => {
    if (v === null) {
      if (run.length) out.push(run);
      run = [];
    } else {
      run.push([i, v]);
    }
  });
  if (run.length) out.push(run);
  return out;
}

export function buildSweepChart(
  sweep: SweepResponse | null,
  threshold: number,
  width: number,
  height: number,
): SweepChart {
  const tmin = sweep ? Math.min(...sweep.thresholds) : 0;
  const tmax = sweep ? Math.max(...sweep.thresholds) : 1;
  const span = tmax - tmin || 1;
  const xOf = (t: number) => PAD.left + ((t - tmin) / span) * (width - PAD.left - PAD.right);
  const yOf = (v: number) => PAD.top + (1 - v) * (height - PAD.top - PAD.bottom);

  const lines: ChartLine[] = [];
  const points: ChartPoint[] = [];
  let empty = true;
  if (sweep) {
    const series: { values: (number | null)[]; dashed: boolean; name: "observed" | "null" }[] = [
      { values: sweep.observed, dashed: false, name: "observed" },
      { values: sweep.null_mean, dashed: true, name: "null" },
    ];
    for (const { values, dashed, name } of series) {
      for (const run of runs(values)) {
        empty = false;
        if (run.length === 1) {
          const [i, v] = run[0] as [number, number];
          points.push({ x: xOf(sweep.thresholds[i] as number), y: yOf(v), series: name });
        } else {
          lines.push({
            dashed,
            series: name,
            points: run.map(([i, v]) => [xOf(sweep.thresholds[i] as number), yOf(v)]),
          });
        }
      }
    }
  }
  const cursorT = Math.min(Math.max(threshold, tmin), tmax);
  return { width, height, lines, points, cursorX: xOf(cursorT), empty, xOf, yOf };
}
