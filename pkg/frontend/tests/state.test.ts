import { describe, expect, it } from "vitest";

import {
  RequestGate,
  hasOverrides,
  initialControls,
  patchOverride,
  rankBody,
  whatIfBody,
} from "../src/state.js";
import type { Controls } from "../src/state.js";

describe("patchOverride", () => {
  it("adds a weight override", () => {
    const next = patchOverride({}, "C1", { weight: 0.8 });
    expect(next).toEqual({ C1: { weight: 0.8 } });
  });

  it("does not mutate the previous overrides", () => {
    const before = { C1: { weight: 0.8 } };
    patchOverride(before, "C1", { weight: 0.3 });
    expect(before).toEqual({ C1: { weight: 0.8 } });
  });

  it("setting a term drops a raw weight, and vice versa", () => {
    let ov = patchOverride({}, "C1", { weight: 0.8 });
    ov = patchOverride(ov, "C1", { weight_term: "H" });
    expect(ov).toEqual({ C1: { weight_term: "H" } });
    ov = patchOverride(ov, "C1", { weight: 0.4 });
    expect(ov).toEqual({ C1: { weight: 0.4 } });
  });

  it("merges orientation with an existing weight", () => {
    let ov = patchOverride({}, "C2", { weight: 0.6 });
    ov = patchOverride(ov, "C2", { orientation: "benefit" });
    expect(ov).toEqual({ C2: { weight: 0.6, orientation: "benefit" } });
  });

  it("patching a key to undefined removes it", () => {
    let ov = patchOverride({}, "C2", { weight: 0.6, orientation: "benefit" });
    ov = patchOverride(ov, "C2", { orientation: undefined });
    expect(ov).toEqual({ C2: { weight: 0.6 } });
  });

  it("a criterion whose override empties out is dropped entirely", () => {
    let ov = patchOverride({}, "C3", { orientation: "cost" });
    ov = patchOverride(ov, "C3", { orientation: undefined });
    expect(ov).toEqual({});
  });

  it("leaves other criteria untouched", () => {
    let ov = patchOverride({}, "C1", { weight: 0.9 });
    ov = patchOverride(ov, "C2", { weight_term: "M" });
    expect(ov).toEqual({ C1: { weight: 0.9 }, C2: { weight_term: "M" } });
  });
});

describe("request bodies", () => {
  const controls: Controls = {
    scheme: "academic",
    dataset: "table3",
    method: "topsis",
    overrides: { C1: { weight: 1 } },
  };

  it("rankBody carries exactly scheme, dataset, and method", () => {
    expect(rankBody(controls)).toEqual({
      scheme: "academic",
      dataset: "table3",
      method: "topsis",
    });
  });

  it("whatIfBody adds the overrides", () => {
    expect(whatIfBody(controls)).toEqual({
      scheme: "academic",
      dataset: "table3",
      method: "topsis",
      overrides: { C1: { weight: 1 } },
    });
  });

  it("hasOverrides reflects the override map", () => {
    expect(hasOverrides(controls)).toBe(true);
    expect(hasOverrides(initialControls("academic", "table3"))).toBe(false);
  });

  it("initialControls starts on the distance method with no overrides", () => {
    expect(initialControls("x", "d")).toEqual({
      scheme: "x",
      dataset: "d",
      method: "topsis",
      overrides: {},
    });
  });
});

describe("RequestGate", () => {
  it("admits only the newest issued id", () => {
    const gate = new RequestGate();
    const first = gate.issue();
    expect(gate.admit(first)).toBe(true);
    const second = gate.issue();
    expect(gate.admit(first)).toBe(false);
    expect(gate.admit(second)).toBe(true);
  });

  it("admission is not consumed by checking", () => {
    const gate = new RequestGate();
    const id = gate.issue();
    expect(gate.admit(id)).toBe(true);
    expect(gate.admit(id)).toBe(true);
  });
});
