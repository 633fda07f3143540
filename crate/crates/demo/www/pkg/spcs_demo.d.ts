/* tslint:disable */
/* eslint-disable */

export class DemoGraph {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    edgeList(): string;
    static fromEdgeList(text: string): DemoGraph;
    /**
     * Nodes, edges and coreness as JSON.
     */
    overview(): string;
    static random(n: number, p: number, seed: bigint): DemoGraph;
    search(algorithm: string, t: number, seed: bigint): string;
    sweep(algorithm: string, runs: bigint, points: number): string;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_demograph_free: (a: number, b: number) => void;
    readonly demograph_edgeList: (a: number) => [number, number];
    readonly demograph_fromEdgeList: (a: number, b: number) => [number, number, number];
    readonly demograph_overview: (a: number) => [number, number];
    readonly demograph_random: (a: number, b: number, c: bigint) => [number, number, number];
    readonly demograph_search: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number, number];
    readonly demograph_sweep: (a: number, b: number, c: number, d: bigint, e: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
