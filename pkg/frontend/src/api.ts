import { FoldReport, TuningParams } from './types.js';
import { analysisQuery } from './params.js';

export async function uploadDataset(body: unknown): Promise<string> {
  const resp = await fetch('/api/datasets', {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    const detail = await resp.json().catch(() => ({}));
    throw new Error(detail.error ?? `upload failed (${resp.status})`);
  }
  return (await resp.json()).id;
}

export async function fetchAnalysis(datasetId: string,
                                    params: TuningParams): Promise<FoldReport> {
  const resp = await fetch(
    `/api/datasets/${datasetId}/analysis?${analysisQuery(params)}`);
  if (!resp.ok) {
    const detail = await resp.json().catch(() => ({}));
    throw new Error(detail.error ?? `analysis failed (${resp.status})`);
  }
  return resp.json();
}
