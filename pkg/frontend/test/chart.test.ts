import { describe, expect, it } from "vitest";

import { buildSweepChart } from "../src/chart.js";
import { sweepResponse } from "./fixtures.js";

describe("buildSweepChart", () => {
  it("cursor x tracks the slider threshold exactly", () => {
    for (const t of [0, 0.05, 0.3, 0.6, 0.9]) {
      const chart = buildSweepChart(sweepResponse, t, 400, 200);
      expect(chart.cursorX).toBeCloseTo(chart.xOf(t), 10);
    }
  });

  it("moving the slider moves the cursor monotonically", () => {
    const xs = [0.1, 0.2, 0.5, 0.8].map(
      (t) => buildSweepChart(sweepResponse, t, 400, 200).cursorX,
    );
    const sorted = [...xs].sort((a, b) => a - b);
    expect(xs).toEqual(sorted);
  });

  it("null values break the observed line instead of interpolating", () => {
    const chart = buildSweepChart(sweepResponse, 0.3, 400, 200);
    const observedLines = chart.lines.filter((l) => l.series === "observed");
    // observed: run 0..0.5, break at 0.6, lone point at 0.7, then gone
    expect(observedLines).toHaveLength(1);
    expect(observedLines[0]?.points).toHaveLength(6);
    const lonely = chart.points.filter((p) => p.series === "observed");
    expect(lonely).toHaveLength(1);
  });

  it("null-model line is dashed, observed is solid", () => {
    const chart = buildSweepChart(sweepResponse, 0.3, 400, 200);
    for (const line of chart.lines) {
      expect(line.dashed).toBe(line.series === "null");
    }
  });

  it("all-null sweep reports empty so the UI can show a placeholder", () => {
    const chart = buildSweepChart(
      {
        ...sweepResponse,
        observed: sweepResponse.observed.map(() => null),
        null_mean: sweepResponse.null_mean.map(() => null),
      },
      0.2,
      400,
      200,
    );
    expect(chart.empty).toBe(true);
    expect(chart.lines).toHaveLength(0);
    expect(chart.points).toHaveLength(0);
  });

  it("without data the cursor still tracks within default bounds", () => {
    const chart = buildSweepChart(null, 0.35, 400, 200);
    expect(chart.cursorX).toBeCloseTo(chart.xOf(0.35), 10);
  });
});
