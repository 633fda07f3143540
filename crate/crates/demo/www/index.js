import init, { DemoGraph } from "./pkg/spcs_demo.js";

const $ = (id) => document.getElementById(id);

let graph = null;
let overview = null;
let positions = [];
let highlighted = new Set();

function status(text, isError = false) {
  $("status").textContent = text;
  $("status").className = isError ? "error" : "";
}

function layout(o) {
  const { n, edges } = o;
  const w = $("graph").width;
  const h = $("graph").height;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n;
    return { x: w / 2 + (w / 3) * Math.cos(a), y: h / 2 + (h / 3) * Math.sin(a) };
  });
  const ideal = Math.sqrt((w * h) / n) * 0.6;
  let temp = w / 10;
  for (let iter = 0; iter < 250; iter++) {
    const disp = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i].x - pos[j].x;
        const dy = pos[i].y - pos[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 0.01);
        const f = (ideal * ideal) / d2;
        disp[i].x += dx * f; disp[i].y += dy * f;
        disp[j].x -= dx * f; disp[j].y -= dy * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u].x - pos[v].x;
      const dy = pos[u].y - pos[v].y;
      const d = Math.max(Math.hypot(dx, dy), 0.01);
      const f = d / ideal;
      disp[u].x -= dx * f; disp[u].y -= dy * f;
      disp[v].x += dx * f; disp[v].y += dy * f;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.max(Math.hypot(disp[i].x, disp[i].y), 0.01);
      const step = Math.min(d, temp);
      pos[i].x = Math.min(w - 10, Math.max(10, pos[i].x + (disp[i].x / d) * step));
      pos[i].y = Math.min(h - 10, Math.max(10, pos[i].y + (disp[i].y / d) * step));
    }
    temp *= 0.97;
  }
  return pos;
}

function drawGraph() {
  const ctx = $("graph").getContext("2d");
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  if (!overview) return;
  const top = Math.max(overview.degeneracy, 1);
  ctx.lineWidth = 1;
  for (const [u, v] of overview.edges) {
    const inside = highlighted.has(u) && highlighted.has(v);
    ctx.strokeStyle = inside ? "#d9480f" : "rgba(0,0,0,0.12)";
    ctx.lineWidth = inside ? 2 : 1;
    ctx.beginPath();
    ctx.moveTo(positions[u].x, positions[u].y);
    ctx.lineTo(positions[v].x, positions[v].y);
    ctx.stroke();
  }
  const r = overview.n > 300 ? 2.5 : 5;
  for (let i = 0; i < overview.n; i++) {
    const shade = 200 - Math.round((140 * overview.coreness[i]) / top);
    ctx.fillStyle = highlighted.has(i) ? "#d9480f" : `rgb(${shade},${shade},${shade + 15})`;
    ctx.beginPath();
    ctx.arc(positions[i].x, positions[i].y, r, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function drawCurve(points) {
  const ctx = $("curve").getContext("2d");
  const { width: w, height: h } = ctx.canvas;
  const pad = 36;
  ctx.clearRect(0, 0, w, h);
  const maxT = points[points.length - 1].t;
  const maxK = Math.max(1, ...points.map((p) => p.upper_bound));
  const x = (t) => pad + ((w - 2 * pad) * (t - 1)) / Math.max(maxT - 1, 1);
  const y = (k) => h - pad - ((h - 2 * pad) * k) / maxK;

  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#444";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2); ctx.lineTo(pad, h - pad); ctx.lineTo(w - pad / 2, h - pad);
  ctx.stroke();
  ctx.fillText("t", w - pad / 2, h - pad + 14);
  ctx.fillText("core", 4, pad / 2);
  ctx.fillText(String(maxK), 8, y(maxK) + 4);
  ctx.fillText("0", 8, y(0) + 4);
  ctx.fillText(String(maxT), x(maxT) - 8, h - pad + 14);

  for (const [key, color] of [["upper_bound", "#1c7ed6"], ["core_number", "#d9480f"]]) {
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    points.forEach((p, i) => (i ? ctx.lineTo(x(p.t), y(p[key])) : ctx.moveTo(x(p.t), y(p[key]))));
    ctx.stroke();
  }
}

function adopt(g) {
  graph = g;
  overview = JSON.parse(g.overview());
  positions = layout(overview);
  highlighted = new Set();
  $("t").max = overview.n;
  $("t").value = Math.min(Number($("t").value), overview.n);
  $("tval").textContent = $("t").value;
  drawGraph();
  status(`${overview.n} nodes, ${overview.m} edges, degeneracy ${overview.degeneracy}`);
}

function guarded(fn) {
  return () => {
    try {
      fn();
    } catch (e) {
      status(e.message ?? String(e), true);
    }
  };
}

$("generate").onclick = guarded(() => {
  adopt(DemoGraph.random(Number($("n").value), Number($("p").value), BigInt($("gseed").value)));
});

$("load").onclick = guarded(() => adopt(DemoGraph.fromEdgeList($("edges").value)));

$("t").oninput = () => ($("tval").textContent = $("t").value);

$("search").onclick = guarded(() => {
  if (!graph) return;
  const found = JSON.parse(graph.search($("algo").value, Number($("t").value), BigInt($("seed").value)));
  highlighted = new Set(found.nodes);
  drawGraph();
  const notes = [found.optimal ? "matches the upper bound" : `upper bound ${found.upper_bound}`];
  if (found.fallback) notes.push("no k-core of that size found, breadth-first fallback");
  if (found.reconstruction) notes.push("greedy baseline is a reconstruction");
  status(`${found.nodes.length} nodes, core number ${found.core_number} (${notes.join("; ")})`);
});

$("sweep").onclick = guarded(() => {
  if (!graph) return;
  const points = JSON.parse(graph.sweep($("algo").value, BigInt($("runs").value), 60));
  drawCurve(points);
  const hits = points.filter((p) => p.core_number === p.upper_bound).length;
  status(`sweep over ${points.length} sizes: bound reached at ${hits}`);
});

await init();
$("generate").onclick();
