// Application state and the actions that drive it. The sampled rows are
// kept in state after the first parse, so changing count or model only
// re-requests: the file is never re-read or re-uploaded. At most one
// tagging request is honored at a time; responses to superseded requests
// are ignored.

import { ApiError, postSample, type TagResponse } from "./api";
import { readCsv } from "./csv";
import { DEFAULT_TAG_COUNT, MODEL_OPTIONS } from "./config";

export interface UiState {
  sampledRows: string[][] | null;
  fileName: string | null;
  selectedCount: number;
  selectedModel: string;
  tags: TagResponse | null;
  approvals: Record<string, boolean>;
  error: string | null;
  isLoading: boolean;
}

export interface StoreDeps {
  baseUrl: string;
  post?: typeof postSample;
  parse?: typeof readCsv;
}

type Listener = (state: UiState) => void;

export class AppStore {
  private readonly baseUrl: string;
  private readonly post: typeof postSample;
  private readonly parse: typeof readCsv;
  private listeners: Listener[] = [];
  private requestSeq = 0;

  state: UiState = {
    sampledRows: null,
    fileName: null,
    selectedCount: DEFAULT_TAG_COUNT,
    selectedModel: MODEL_OPTIONS[0],
    tags: null,
    approvals: {},
    error: null,
    isLoading: false,
  };

  constructor(deps: StoreDeps) {
    this.baseUrl = deps.baseUrl;
    this.post = deps.post ?? postSample;
    this.parse = deps.parse ?? readCsv;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<UiState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Parse a newly selected file and request tags for it. */
  async setFile(file: File): Promise<void> {
    if (!file.name.toLowerCase().endsWith(".csv")) {
      this.update({ error: "Only .csv files are supported" });
      return;
    }
    this.update({ isLoading: true, error: null, tags: null, approvals: {} });
    try {
      const rows = await this.parse(file);
      this.update({ sampledRows: rows, fileName: file.name });
    } catch (error) {
      this.update({
        isLoading: false,
        sampledRows: null,
        fileName: null,
        error: error instanceof Error ? error.message : String(error),
      });
      return;
    }
    await this.requestTags();
  }

  /** Changing a parameter keeps the sample and only re-requests. */
  async setCount(count: number): Promise<void> {
    this.update({ selectedCount: count });
    if (this.state.sampledRows) await this.requestTags();
  }

  async setModel(model: string): Promise<void> {
    this.update({ selectedModel: model });
    if (this.state.sampledRows) await this.requestTags();
  }

  async requestTags(): Promise<void> {
    const rows = this.state.sampledRows;
    if (!rows) return;
    const seq = ++this.requestSeq;
    this.update({ isLoading: true, error: null });
    try {
      const tags = await this.post(
        this.baseUrl,
        rows,
        this.state.selectedCount,
        this.state.selectedModel,
      );
      if (seq !== this.requestSeq) return; // superseded by a newer request
      const approvals: Record<string, boolean> = {};
      for (const tag of tags.english) approvals[tag] = false;
      this.update({ tags, approvals, isLoading: false, error: null });
    } catch (error) {
      if (seq !== this.requestSeq) return;
      const detail =
        error instanceof ApiError
          ? error.detail
          : error instanceof Error
            ? error.message
            : String(error);
      this.update({ tags: null, approvals: {}, isLoading: false, error: detail });
    }
  }

  toggleApproval(tag: string): void {
    if (!this.state.tags || !(tag in this.state.approvals)) return;
    this.update({
      approvals: { ...this.state.approvals, [tag]: !this.state.approvals[tag] },
    });
  }

  approvedCount(): number {
    return Object.values(this.state.approvals).filter(Boolean).length;
  }

  /** Approved (english, translated) pairs in response order. */
  approvedPairs(): Array<[string, string]> {
    const tags = this.state.tags;
    if (!tags) return [];
    const pairs: Array<[string, string]> = [];
    tags.english.forEach((english, index) => {
      if (this.state.approvals[english]) {
        pairs.push([english, tags.estonian[index] ?? ""]);
      }
    });
    return pairs;
  }
}
