import { DEFAULT_PARAMS, FoldReport, TuningParams } from './types.js';
import { NumericParam, PARAM_LIMITS, clampParam } from './params.js';
import { AnalysisScheduler } from './debounce.js';
import { fetchAnalysis, uploadDataset } from './api.js';
import { GeometryPanel, OrientationPanel } from './panels.js';

const params: TuningParams = { ...DEFAULT_PARAMS };
let datasetId: string | null = null;

const geometry = new GeometryPanel(
  document.getElementById('geometry') as HTMLCanvasElement);
const orientation = new OrientationPanel(
  document.getElementById('orientation') as HTMLCanvasElement);
const banner = document.getElementById('banner') as HTMLElement;
const summary = document.getElementById('summary') as HTMLElement;

function showError(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function applyReport(report: FoldReport): void {
  banner.hidden = true;
  geometry.setReport(report);
  orientation.setReport(report);
  const chir = report.chirality.confident
    ? report.chirality.direction
    : `${report.chirality.direction} (low confidence)`;
  summary.textContent =
    `${report.folds.length} folds, ` +
    `${report.minimal_subsets.length} minimal / ` +
    `${report.maximal_subsets.length} maximal, chirality ${chir}`;
}

const scheduler = new AnalysisScheduler<TuningParams, FoldReport>({
  fetcher: (p) => {
    if (!datasetId) return Promise.reject(new Error('no dataset loaded'));
    return fetchAnalysis(datasetId, p);
  },
  onResult: applyReport,
  onError: showError,
});

// linked highlighting between the panels
orientation.onHover = (id) => {
  orientation.setHighlight(id);
  geometry.setHighlight(id);
};

function bindSlider(name: NumericParam): void {
  const slider = document.getElementById(name) as HTMLInputElement;
  const label = document.getElementById(`${name}-value`) as HTMLElement;
  const limits = PARAM_LIMITS[name];
  slider.min = limits.min.toString();
  slider.max = limits.max.toString();
  slider.step = limits.step.toString();
  slider.value = params[name].toString();
  label.textContent = params[name].toFixed(2);
  slider.addEventListener('input', () => {
    params[name] = clampParam(name, parseFloat(slider.value));
    label.textContent = params[name].toFixed(2);
    if (datasetId) scheduler.request({ ...params });
  });
}

(['tau', 'delta', 'smooth', 'rho'] as NumericParam[]).forEach(bindSlider);

function bindSelect(name: 'side' | 'mode'): void {
  const select = document.getElementById(name) as HTMLSelectElement;
  select.value = params[name];
  select.addEventListener('change', () => {
    if (name === 'side') params.side = select.value as TuningParams['side'];
    else params.mode = select.value as TuningParams['mode'];
    if (datasetId) scheduler.request({ ...params });
  });
}

bindSelect('side');
bindSelect('mode');

const fileInput = document.getElementById('file') as HTMLInputElement;
fileInput.addEventListener('change', async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  try {
    const doc = JSON.parse(await file.text());
    datasetId = await uploadDataset(doc);
    scheduler.requestNow({ ...params });
  } catch (err) {
    showError(err instanceof Error ? err.message : String(err));
  }
});
