import type { MatrixResponse } from './api.js';

/**
 * Matrix heatmap: one cell per deployment x offering, colored by decision
 * tier, with the gap parenthetical on hover and the per-row range in the
 * last column. All strings come straight from the service body.
 */

function escapeHtml(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function renderMatrixView(root: HTMLElement, matrix: MatrixResponse,
                                 names: Map<string, string>): void {
  const head = matrix.offering_ids
    .map((id) => `<th>${escapeHtml(names.get(id) ?? id)}</th>`)
    .join('');
  const rows = matrix.rows.map((row) => {
    const cells = row.cells.map((cell) => {
      const tier = cell.display.tier?.toLowerCase() ?? 'never';
      const hover = cell.display.mean_gap === null
        ? cell.display.t_star
        : `${cell.display.t_star} (${cell.display.mean_gap})`;
      return `<td class="cell tier-${tier}" title="${escapeHtml(hover)}"
                  data-deployment="${escapeHtml(row.deployment_id)}"
                  data-offering="${escapeHtml(cell.offering_id)}">
                ${escapeHtml(cell.display.t_star)}</td>`;
    }).join('');
    const label = names.get(row.deployment_id) ?? row.deployment_id;
    return `<tr><th class="row-label">${escapeHtml(label)}</th>${cells}` +
      `<td class="range">${escapeHtml(row.display_range)}</td></tr>`;
  }).join('');

  root.innerHTML = `
    <table class="matrix" data-field="matrix">
      <thead><tr><th>model</th>${head}<th>range</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>`;
}
