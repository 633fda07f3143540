/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_demograph_free: (a: number, b: number) => void;
export const demograph_edgeList: (a: number) => [number, number];
export const demograph_fromEdgeList: (a: number, b: number) => [number, number, number];
export const demograph_overview: (a: number) => [number, number];
export const demograph_random: (a: number, b: number, c: bigint) => [number, number, number];
export const demograph_search: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number, number];
export const demograph_sweep: (a: number, b: number, c: number, d: bigint, e: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
