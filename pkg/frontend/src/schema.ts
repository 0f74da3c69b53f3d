/** Validation of loaded export files, with errors a person can act on. */

import type { MapExport } from "./types.js";

export const SCHEMA_VERSION = 1;

export class SchemaError extends Error {}

export function validateExport(doc: unknown): MapExport {
  if (typeof doc !== "object" || doc === null) {
    throw new SchemaError("not a JSON object");
  }
  const d = doc as Record<string, unknown>;
  if (d.schema_version !== SCHEMA_VERSION) {
    throw new SchemaError(
      `unsupported map schema: expected ${SCHEMA_VERSION}, ` +
      `found ${JSON.stringify(d.schema_version)}`,
    );
  }
  if (!Array.isArray(d.terms) || d.terms.length === 0) {
    throw new SchemaError("empty map: the export contains no terms");
  }
  const terms = d.terms as Record<string, unknown>[];
  let scored = 0;
  terms.forEach((t, i) => {
    if (typeof t.label !== "string" || !t.label) {
      throw new SchemaError(`term ${i + 1}: missing label`);
    }
    for (const field of ["x", "y", "weight", "cluster"]) {
      if (typeof t[field] !== "number" || !Number.isFinite(t[field] as number)) {
        throw new SchemaError(`term ${JSON.stringify(t.label)}: bad ${field}`);
      }
    }
    if (t.id !== i + 1) {
      throw new SchemaError(`term ids must be dense 1..n (term ${i + 1})`);
    }
    if (t.score !== undefined) {
      if (typeof t.score !== "number" || !Number.isFinite(t.score)) {
        throw new SchemaError(`term ${JSON.stringify(t.label)}: bad score`);
      }
      scored += 1;
    }
  });
  if (scored !== 0 && scored !== terms.length) {
    throw new SchemaError("score must be present on all terms or on none");
  }
  const clusters = Array.isArray(d.clusters) ? d.clusters : [];
  return {
    schema_version: SCHEMA_VERSION,
    terms: terms as unknown as MapExport["terms"],
    clusters: clusters as MapExport["clusters"],
    meta: (typeof d.meta === "object" && d.meta !== null
      ? d.meta
      : {}) as MapExport["meta"],
  };
}
