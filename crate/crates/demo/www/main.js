import init, { describe, list_cells, decompose_cell } from "./pkg/parity_demo.js";

const $ = (id) => document.getElementById(id);

function selection() {
  return [$("family").value, Number($("n").value)];
}

function attempt(f) {
  $("error").textContent = "";
  try {
    f();
  } catch (e) {
    $("error").textContent = String(e);
  }
}

function row(cells, tag = "td") {
  const tr = document.createElement("tr");
  for (const text of cells) {
    const td = document.createElement(tag);
    td.textContent = text;
    tr.appendChild(td);
  }
  return tr;
}

function generate() {
  const d = JSON.parse(describe(...selection()));
  $("drawing").innerHTML = d.svg;
  $("counts").textContent =
    `${d.elements} elements; by dimension: ${d.per_dimension.join(", ")}`;
  const table = $("axioms");
  table.replaceChildren();
  for (const a of d.axioms) {
    const tr = row([a.axiom, a.passed ? "pass" : `fail (${a.witnesses})`]);
    tr.className = a.passed ? "pass" : "fail";
    table.appendChild(tr);
  }
  $("cells").replaceChildren();
  $("cell-count").textContent = "";
}

function list() {
  const cells = JSON.parse(list_cells(...selection()));
  $("cell-count").textContent = `${cells.length} cells (click one to decompose it)`;
  const table = $("cells");
  table.replaceChildren(row(["M", "P", "dim", "rank", "atom"], "th"));
  for (const c of cells) {
    const tr = row([c.m.join(" "), c.p.join(" "), c.dim, c.rank, c.atom ?? ""]);
    tr.addEventListener("click", () => {
      $("m").value = c.m.join(",");
      $("p").value = c.p.join(",");
      attempt(decompose);
    });
    table.appendChild(tr);
  }
}

function decompose() {
  const r = JSON.parse(decompose_cell(...selection(), $("m").value, $("p").value));
  $("tree").textContent =
    `${r.tree}\nleaves: ${r.leaves.join(", ")}; depth ${r.depth}; ` +
    (r.verified ? "recomposes exactly" : "DOES NOT recompose");
}

await init();
$("generate").addEventListener("click", () => attempt(generate));
$("list").addEventListener("click", () => attempt(list));
$("decompose").addEventListener("click", () => attempt(decompose));
attempt(generate);
