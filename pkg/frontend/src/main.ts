/** Canvas rendering and event wiring around the ViewState machine. */

import { ViewState } from "./viewer.js";
import { densityGrid } from "./density.js";
import { densityColor } from "./color.js";
import { SchemaError } from "./schema.js";
import { screenToWorld } from "./camera.js";
import type { OverlayMode } from "./types.js";
import { hasScores } from "./types.js";

const canvas = document.getElementById("map") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const fileInput = document.getElementById("file") as HTMLInputElement;
const searchBox = document.getElementById("search") as HTMLInputElement;
const noticeEl = document.getElementById("notice") as HTMLElement;
const tooltipEl = document.getElementById("tooltip") as HTMLElement;
const matchesEl = document.getElementById("matches") as HTMLElement;
const overlayButtons = Array.from(
  document.querySelectorAll<HTMLButtonElement>("button[data-overlay]"),
);

function viewportSize() {
  return { width: canvas.clientWidth, height: canvas.clientHeight };
}

const state = new ViewState(viewportSize());

function resize() {
  canvas.width = canvas.clientWidth * devicePixelRatio;
  canvas.height = canvas.clientHeight * devicePixelRatio;
  ctx.setTransform(devicePixelRatio, 0, 0, devicePixelRatio, 0, 0);
  state.viewport = viewportSize();
  draw();
}

function showNotice(text: string, isError = false) {
  noticeEl.textContent = text;
  noticeEl.className = isError ? "notice error" : "notice";
  noticeEl.style.display = text ? "block" : "none";
}

function drawDensityBackground() {
  if (!state.map) return;
  const vp = state.viewport;
  const w = Math.max(Math.floor(vp.width / 6), 8);
  const h = Math.max(Math.floor(vp.height / 6), 8);
  const [x0, y1] = screenToWorld(state.camera, vp, 0, 0);
  const [x1, y0] = screenToWorld(state.camera, vp, vp.width, vp.height);
  const grid = densityGrid(state.map, { x0, y0, x1, y1 }, w, h,
                           state.bandwidth, state.densityPeak);
  const img = ctx.createImageData(w, h);
  for (let i = 0; i < w * h; i++) {
    const [r, g, b] = densityColor(grid[i]!);
    img.data[4 * i] = r;
    img.data[4 * i + 1] = g;
    img.data[4 * i + 2] = b;
    img.data[4 * i + 3] = 255;
  }
  const off = document.createElement("canvas");
  off.width = w;
  off.height = h;
  off.getContext("2d")!.putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = true;
  ctx.drawImage(off, 0, 0, w, h, 0, 0, vp.width, vp.height);
}

function draw() {
  const vp = state.viewport;
  ctx.clearRect(0, 0, vp.width, vp.height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, vp.width, vp.height);
  if (!state.map) return;

  if (state.overlay === "density") {
    drawDensityBackground();
  }
  const scene = state.scene();
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  for (const t of scene) {
    if (!t.visible && !t.highlighted) continue;
    if (t.highlighted) {
      ctx.beginPath();
      ctx.arc(t.sx, t.sy, t.fontPx * 1.4, 0, 2 * Math.PI);
      ctx.strokeStyle = "#222";
      ctx.lineWidth = 2;
      ctx.stroke();
    }
    ctx.font = `${t.fontPx.toFixed(1)}px Helvetica, Arial, sans-serif`;
    ctx.fillStyle = state.overlay === "density" ? "#1a1a1a" : t.color;
    ctx.fillText(t.label, t.sx, t.sy);
  }
}

function refreshOverlayButtons() {
  const scoreOk = state.map !== null && hasScores(state.map);
  for (const btn of overlayButtons) {
    const mode = btn.dataset.overlay as OverlayMode;
    btn.classList.toggle("active", state.overlay === mode);
    if (mode === "score") {
      btn.disabled = !scoreOk;
      btn.title = scoreOk ? "color terms by score"
        : "this export carries no scores";
    }
  }
}

function loadDocument(doc: unknown, sourceName: string) {
  try {
    state.open(doc);
    showNotice(`loaded ${sourceName}: ${state.map!.terms.length} terms`);
    refreshOverlayButtons();
    draw();
  } catch (e) {
    if (e instanceof SchemaError) {
      showNotice(e.message, true);
    } else {
      throw e;
    }
  }
}

fileInput.addEventListener("change", async () => {
  const f = fileInput.files?.[0];
  if (!f) return;
  try {
    loadDocument(JSON.parse(await f.text()), f.name);
  } catch (e) {
    showNotice(`cannot parse ${f.name}: ${e}`, true);
  }
});

searchBox.addEventListener("input", () => {
  state.search(searchBox.value);
  matchesEl.innerHTML = "";
  if (state.matches.length > 1 && state.map) {
    for (const i of state.matches.slice(0, 12)) {
      const li = document.createElement("li");
      li.textContent = state.map.terms[i]!.label;
      li.addEventListener("click", () => {
        searchBox.value = state.map!.terms[i]!.label;
        state.search(searchBox.value);
        matchesEl.innerHTML = "";
        draw();
      });
      matchesEl.appendChild(li);
    }
  }
  showNotice(state.notice?.text ?? "");
  draw();
});

for (const btn of overlayButtons) {
  btn.addEventListener("click", () => {
    state.setOverlay(btn.dataset.overlay as OverlayMode);
    refreshOverlayButtons();
    draw();
  });
}

canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  const rect = canvas.getBoundingClientRect();
  const factor = Math.exp(-ev.deltaY * 0.0015);
  state.zoomAtScreen(ev.clientX - rect.left, ev.clientY - rect.top, factor);
  draw();
}, { passive: false });

let dragging = false;
let lastX = 0;
let lastY = 0;
canvas.addEventListener("pointerdown", (ev) => {
  dragging = true;
  lastX = ev.clientX;
  lastY = ev.clientY;
  canvas.setPointerCapture(ev.pointerId);
});
canvas.addEventListener("pointermove", (ev) => {
  const rect = canvas.getBoundingClientRect();
  if (dragging) {
    state.panByPixels(ev.clientX - lastX, ev.clientY - lastY);
    lastX = ev.clientX;
    lastY = ev.clientY;
    draw();
    return;
  }
  state.hoverAt(ev.clientX - rect.left, ev.clientY - rect.top);
  if (state.hoverTerm !== null && state.map) {
    const t = state.map.terms[state.hoverTerm]!;
    tooltipEl.style.display = "block";
    tooltipEl.style.left = `${ev.clientX - rect.left + 14}px`;
    tooltipEl.style.top = `${ev.clientY - rect.top + 14}px`;
    tooltipEl.textContent =
      `${t.label}  |  weight ${t.weight}  |  cluster ${t.cluster}` +
      (t.score !== undefined ? `  |  score ${t.score}` : "");
  } else {
    tooltipEl.style.display = "none";
  }
});
canvas.addEventListener("pointerup", () => {
  dragging = false;
});

window.addEventListener("resize", resize);

const mapUrl = new URLSearchParams(location.search).get("map");
if (mapUrl) {
  fetch(mapUrl)
    .then((r) => {
      if (!r.ok) throw new Error(`${r.status} ${r.statusText}`);
      return r.json();
    })
    .then((doc) => loadDocument(doc, mapUrl))
    .catch((e) => showNotice(`cannot load ${mapUrl}: ${e}`, true));
}

resize();
