import init, { membershipMap, refute, polarCheck } from "./pkg/lccone_web.js";

const COLORS = [[238, 238, 238], [232, 136, 68], [68, 136, 204], [51, 170, 119]];

function fields(form) {
  return Object.fromEntries(new FormData(form).entries());
}

function show(el, f) {
  try {
    el.classList.remove("error");
    el.textContent = f();
  } catch (e) {
    el.classList.add("error");
    el.textContent = e.message ?? String(e);
  }
}

function drawMap() {
  const f = fields(document.getElementById("map-form"));
  const steps = Number(f.steps);
  const status = document.getElementById("map-status");
  show(status, () => {
    const cells = membershipMap(f.u, f.w, Number(f.j), f.max, steps);
    const canvas = document.getElementById("map");
    const ctx = canvas.getContext("2d");
    const img = ctx.createImageData(steps, steps);
    let onlyU = 0;
    cells.forEach((code, i) => {
      // Row 0 is the smallest b; draw it at the bottom.
      const row = steps - 1 - Math.floor(i / steps);
      const at = 4 * (row * steps + (i % steps));
      img.data.set([...COLORS[code], 255], at);
      if (code === 1) onlyU++;
    });
    const scratch = new OffscreenCanvas(steps, steps);
    scratch.getContext("2d").putImageData(img, 0, 0);
    ctx.imageSmoothingEnabled = false;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.drawImage(scratch, 0, 0, canvas.width, canvas.height);
    return `${onlyU} of ${cells.length} grid pairs lie in u~ but outside B.`;
  });
}

function bind(id, handler) {
  document.getElementById(id).addEventListener("submit", (ev) => {
    ev.preventDefault();
    handler();
  });
}

await init();
bind("map-form", drawMap);
bind("refute-form", () => {
  const f = fields(document.getElementById("refute-form"));
  show(document.getElementById("refute-out"), () => JSON.stringify(JSON.parse(refute(f.u, f.w)), null, 2));
});
bind("polar-form", () => {
  const f = fields(document.getElementById("polar-form"));
  show(document.getElementById("polar-out"), () => JSON.stringify(JSON.parse(polarCheck(f.mu, f.v)), null, 2));
});
drawMap();
