// Built with: wasm-bindgen --target web --out-dir www/pkg target/wasm32-unknown-unknown/release/padic_serre_web.wasm
import init, { polygon, weights, frobenius } from "./pkg/padic_serre_web.js";

const $ = (id) => document.getElementById(id);

function show(id, fn) {
  const out = $(id);
  try {
    const json = JSON.parse(fn());
    out.className = "";
    out.textContent = JSON.stringify(json, null, 2);
    return json;
  } catch (e) {
    out.className = "err";
    out.textContent = String(e);
    return null;
  }
}

function frac(s) {
  const [n, d] = String(s).split("/").map(Number);
  return d === undefined ? n : n / d;
}

function optInt(id) {
  const v = $(id).value.trim();
  return v === "" ? undefined : parseInt(v, 10);
}

function plotPolygon(np) {
  const c = $("np-canvas");
  const g = c.getContext("2d");
  g.clearRect(0, 0, c.width, c.height);
  if (!np) return;
  const pts = np.vertices.map(([x, y]) => [x, frac(y)]);
  const pad = 36;
  const maxX = Math.max(np.degree, 1);
  const ys = pts.map((p) => p[1]);
  const minY = Math.min(0, ...ys);
  const maxY = Math.max(1, ...ys);
  const sx = (x) => pad + (x / maxX) * (c.width - 2 * pad);
  const sy = (y) => c.height - pad - ((y - minY) / (maxY - minY)) * (c.height - 2 * pad);

  g.strokeStyle = "#999";
  g.beginPath();
  g.moveTo(pad, sy(0));
  g.lineTo(c.width - pad, sy(0));
  g.moveTo(pad, pad / 2);
  g.lineTo(pad, c.height - pad);
  g.stroke();
  g.fillStyle = "#555";
  g.font = "12px sans-serif";
  for (let x = 0; x <= maxX; x++) g.fillText(String(x), sx(x) - 3, c.height - pad + 16);

  g.strokeStyle = "#1f5fbf";
  g.lineWidth = 2;
  g.beginPath();
  pts.forEach(([x, y], i) => (i ? g.lineTo(sx(x), sy(y)) : g.moveTo(sx(x), sy(y))));
  g.stroke();
  g.fillStyle = "#1f5fbf";
  for (const [x, y] of pts) {
    g.beginPath();
    g.arc(sx(x), sy(y), 4, 0, 2 * Math.PI);
    g.fill();
  }
  g.fillStyle = "#222";
  np.segments.forEach((s, i) => {
    const [x0, y0] = pts[i];
    const [x1, y1] = pts[i + 1];
    g.fillText(`slope ${s.slope} x${s.multiplicity}`, (sx(x0) + sx(x1)) / 2 + 4, (sy(y0) + sy(y1)) / 2 - 6);
  });
  if (np.infinite_multiplicity > 0) g.fillText(`${np.infinite_multiplicity} root(s) at 0`, c.width - 140, pad);
}

await init();

$("np-go").onclick = () => plotPolygon(show("np-out", () => polygon($("np-poly").value, Number($("np-p").value))));
$("w-go").onclick = () => show("w-out", () => weights($("w-profile").value, Number($("w-p").value)));
$("f-go").onclick = () =>
  show("f-out", () =>
    frobenius(
      Number($("f-p").value),
      Number($("f-ell").value),
      $("f-ct").value,
      $("f-sextic").value,
      optInt("f-artin"),
      optInt("f-f"),
      $("f-fine").value,
      $("f-neb").value,
    ),
  );

$("np-go").click();
