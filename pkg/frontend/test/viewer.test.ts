import { readFileSync } from "node:fs";
import { beforeEach, describe, expect, it } from "vitest";

import { fitZoom } from "../src/camera.js";
import { searchLabels } from "../src/search.js";
import { visibleLabels } from "../src/declutter.js";
import { mapBounds } from "../src/types.js";
import { ViewState } from "../src/viewer.js";

const fixtureText = readFileSync(
  new URL("./fixtures/map.json", import.meta.url), "utf-8");

function freshDoc(): unknown {
  return JSON.parse(fixtureText);
}

describe("ViewState with a pipeline-produced export", () => {
  let vs: ViewState;

  beforeEach(() => {
    vs = new ViewState({ width: 800, height: 600 });
    vs.open(freshDoc());
  });

  it("renders every term of the export in the scene", () => {
    const scene = vs.scene();
    expect(scene.length).toBe(100);
    const labels = new Set(scene.map((t) => t.label));
    expect(labels.size).toBe(100);
  });

  it("starts fit-to-view with the cluster overlay", () => {
    expect(vs.overlay).toBe("cluster");
    expect(vs.camera.zoom).toBeCloseTo(fitZoom(mapBounds(vs.map!), vs.viewport), 10);
  });

  it("search centers and highlights the best match", () => {
    const label = vs.map!.terms[7]!.label;
    vs.search(label);
    expect(vs.matchedTerm).not.toBeNull();
    const t = vs.map!.terms[vs.matchedTerm!]!;
    expect(t.label).toBe(label);
    expect(vs.camera.cx).toBe(t.x);
    expect(vs.camera.cy).toBe(t.y);
    const highlighted = vs.scene().filter((s) => s.highlighted);
    expect(highlighted.length).toBe(1);
    expect(highlighted[0]!.label).toBe(label);
  });

  it("search prefers the shortest label, then lexicographic", () => {
    const result = searchLabels(vs.map!, "a");
    expect(result.matches.length).toBeGreaterThan(1);
    const labels = result.matches.map((i) => vs.map!.terms[i]!.label);
    for (let i = 1; i < labels.length; i++) {
      const prev = labels[i - 1]!;
      const cur = labels[i]!;
      expect(
        prev.length < cur.length || (prev.length === cur.length && prev <= cur),
      ).toBe(true);
    }
  });

  it("no-hit search leaves the camera alone and posts a notice", () => {
    const before = { ...vs.camera };
    vs.search("zzzzzz-no-such-term");
    expect(vs.camera).toEqual(before);
    expect(vs.notice?.text).toContain("no results");
    expect(vs.matchedTerm).toBeNull();
  });

  it("clearing the query removes the highlight", () => {
    vs.search(vs.map!.terms[0]!.label);
    expect(vs.matchedTerm).not.toBeNull();
    vs.search("");
    expect(vs.matchedTerm).toBeNull();
    expect(vs.scene().every((s) => !s.highlighted)).toBe(true);
  });

  it("overlay toggle changes colors but not geometry", () => {
    const before = vs.scene();
    vs.setOverlay("density");
    const after = vs.scene();
    expect(after.map((t) => [t.sx, t.sy])).toEqual(before.map((t) => [t.sx, t.sy]));
    const changed = after.filter((t, i) => t.color !== before[i]!.color);
    expect(changed.length).toBeGreaterThan(0);
  });

  it("toggling back restores the previous colors exactly", () => {
    const clusterColors = vs.scene().map((t) => t.color);
    vs.setOverlay("score");
    vs.setOverlay("cluster");
    expect(vs.scene().map((t) => t.color)).toEqual(clusterColors);
  });

  it("score overlay is selectable only when scores exist", () => {
    expect(vs.scoreOverlayAvailable()).toBe(true);
    vs.setOverlay("score");
    expect(vs.overlay).toBe("score");

    const doc = freshDoc() as { terms: Record<string, unknown>[] };
    for (const t of doc.terms) delete t.score;
    const plain = new ViewState({ width: 800, height: 600 });
    plain.open(doc);
    expect(plain.scoreOverlayAvailable()).toBe(false);
    plain.setOverlay("score");
    expect(plain.overlay).toBe("cluster"); // refused, no exception
  });

  it("zoom keeps the cursor-anchored term fixed within 1px", () => {
    const term = vs.map!.terms[3]!;
    const sceneBefore = vs.scene()[3]!;
    // put the cursor exactly on the term and zoom about it, repeatedly
    let cursor: [number, number] = [sceneBefore.sx, sceneBefore.sy];
    for (const f of [1.5, 1.5, 0.7, 2.2]) {
      vs.zoomAtScreen(cursor[0], cursor[1], f);
      const s = vs.scene()[3]!;
      expect(Math.hypot(s.sx - cursor[0], s.sy - cursor[1])).toBeLessThanOrEqual(1);
      cursor = [s.sx, s.sy];
    }
    expect(vs.map!.terms[3]).toEqual(term);
  });

  it("zooming in reveals more labels, by the same priority rule", () => {
    const base = fitZoom(mapBounds(vs.map!), vs.viewport);
    const atFit = visibleLabels(vs.map!, base);
    const zoomed = visibleLabels(vs.map!, base * 8);
    expect(zoomed.size).toBeGreaterThanOrEqual(atFit.size);
    // visibility is a pure function of (map, zoom)
    expect(visibleLabels(vs.map!, base * 8)).toEqual(zoomed);
  });

  it("reloading the same file resets to the identical initial state", () => {
    vs.setOverlay("density");
    vs.search(vs.map!.terms[5]!.label);
    vs.zoomAtScreen(100, 100, 3);
    const snapshotBefore = JSON.stringify(vs.map);

    const vs2 = new ViewState({ width: 800, height: 600 });
    vs2.open(freshDoc());
    vs.open(freshDoc());
    expect(vs.camera).toEqual(vs2.camera);
    expect(vs.overlay).toBe("cluster");
    expect(vs.scene()).toEqual(vs2.scene());
    // the viewer never mutated the previously loaded export
    expect(snapshotBefore).toBe(JSON.stringify(vs2.map));
  });

  it("hover finds the nearest term within the radius", () => {
    const s = vs.scene()[11]!;
    const probe: [number, number] = [s.sx + 3, s.sy - 2];
    const byDistance = vs.scene()
      .map((t) => ({ i: t.index, d: Math.hypot(t.sx - probe[0], t.sy - probe[1]) }))
      .sort((a, b) => a.d - b.d);
    vs.hoverAt(probe[0], probe[1]);
    expect(vs.hoverTerm).toBe(byDistance[0]!.i);
    vs.hoverAt(-1000, -1000);
    expect(vs.hoverTerm).toBeNull();
  });
});
