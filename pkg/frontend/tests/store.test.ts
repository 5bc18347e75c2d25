import { describe, expect, it, vi } from "vitest";

import { ApiError, type TagResponse } from "../src/api";
import { AppStore } from "../src/store";

const ROWS = [
  ["population", "year"],
  ["1000", "2020"],
];

function tagResponse(english: string[], estonian?: string[]): TagResponse {
  return { english, estonian: estonian ?? english.map((t) => t.toUpperCase()), warnings: [] };
}

function storeWith(post: any, parse?: any): AppStore {
  return new AppStore({
    baseUrl: "http://backend.test/",
    post,
    parse: parse ?? vi.fn().mockResolvedValue(ROWS),
  });
}

function csvFile(name = "data.csv"): File {
  return new File(["population,year\n1000,2020\n"], name);
}

describe("AppStore", () => {
  it("parses the file once and requests tags for it", async () => {
    const parse = vi.fn().mockResolvedValue(ROWS);
    const post = vi.fn().mockResolvedValue(tagResponse(["a", "b"]));
    const store = storeWith(post, parse);

    await store.setFile(csvFile());

    expect(parse).toHaveBeenCalledTimes(1);
    expect(post).toHaveBeenCalledWith("http://backend.test/", ROWS, 5, "gpt-3.5-turbo");
    expect(store.state.sampledRows).toEqual(ROWS);
    expect(store.state.tags?.english).toEqual(["a", "b"]);
    expect(store.state.isLoading).toBe(false);
    expect(store.state.approvals).toEqual({ a: false, b: false });
  });

  it("re-requests on parameter change without re-reading the file", async () => {
    const parse = vi.fn().mockResolvedValue(ROWS);
    const post = vi.fn().mockResolvedValue(tagResponse(["a"]));
    const store = storeWith(post, parse);

    await store.setFile(csvFile());
    await store.setCount(8);
    await store.setModel("gpt-4");

    expect(parse).toHaveBeenCalledTimes(1); // never re-uploaded
    expect(post).toHaveBeenCalledTimes(3);
    expect(post.mock.calls[1]).toEqual(["http://backend.test/", ROWS, 8, "gpt-3.5-turbo"]);
    expect(post.mock.calls[2]).toEqual(["http://backend.test/", ROWS, 8, "gpt-4"]);
  });

  it("changing parameters before any upload does not request", async () => {
    const post = vi.fn();
    const store = storeWith(post);
    await store.setCount(9);
    expect(post).not.toHaveBeenCalled();
  });

  it("keeps the sampled rows when a request fails", async () => {
    const post = vi
      .fn()
      .mockRejectedValue(new ApiError(400, "Count must be between 3 and 10"));
    const store = storeWith(post);

    await store.setFile(csvFile());

    expect(store.state.error).toBe("Count must be between 3 and 10");
    expect(store.state.tags).toBeNull();
    expect(store.state.isLoading).toBe(false);
    expect(store.state.sampledRows).toEqual(ROWS); // retry is one click away
  });

  it("rejects non-csv files without touching the parser", async () => {
    const parse = vi.fn();
    const post = vi.fn();
    const store = storeWith(post, parse);

    await store.setFile(csvFile("notes.txt"));

    expect(store.state.error).toMatch(/\.csv/);
    expect(parse).not.toHaveBeenCalled();
    expect(post).not.toHaveBeenCalled();
  });

  it("surfaces parse failures in the error state without requesting", async () => {
    const parse = vi.fn().mockRejectedValue(new Error("file contains no records"));
    const post = vi.fn();
    const store = storeWith(post, parse);

    await store.setFile(csvFile());

    expect(store.state.error).toBe("file contains no records");
    expect(post).not.toHaveBeenCalled();
  });

  it("ignores responses from superseded requests", async () => {
    let resolveFirst!: (value: TagResponse) => void;
    const first = new Promise<TagResponse>((resolve) => {
      resolveFirst = resolve;
    });
    const post = vi
      .fn()
      .mockImplementationOnce(() => first)
      .mockResolvedValueOnce(tagResponse(["fresh"]));
    const store = storeWith(post);

    const fileFlow = store.setFile(csvFile()); // first request stays pending
    await vi.waitFor(() => expect(post).toHaveBeenCalledTimes(1));
    const second = store.requestTags();
    resolveFirst(tagResponse(["stale"]));
    await second;
    await fileFlow;

    expect(store.state.tags?.english).toEqual(["fresh"]);
  });

  it("collects approved pairs in response order", async () => {
    const post = vi
      .fn()
      .mockResolvedValue(tagResponse(["a", "b", "c"], ["x", "y", "z"]));
    const store = storeWith(post);
    await store.setFile(csvFile());

    store.toggleApproval("c");
    store.toggleApproval("a");

    expect(store.approvedCount()).toBe(2);
    expect(store.approvedPairs()).toEqual([
      ["a", "x"],
      ["c", "z"],
    ]);
  });

  it("pairs english tags with empty strings when translation is missing", async () => {
    const post = vi.fn().mockResolvedValue({
      english: ["a", "b"],
      estonian: [],
      warnings: ["translation_unavailable"],
    });
    const store = storeWith(post);
    await store.setFile(csvFile());

    store.toggleApproval("b");
    expect(store.approvedPairs()).toEqual([["b", ""]]);
  });

  it("resets approvals when new tags arrive", async () => {
    const post = vi
      .fn()
      .mockResolvedValueOnce(tagResponse(["a", "b"]))
      .mockResolvedValueOnce(tagResponse(["c"]));
    const store = storeWith(post);
    await store.setFile(csvFile());
    store.toggleApproval("a");

    await store.setCount(3);

    expect(store.state.approvals).toEqual({ c: false });
    expect(store.approvedPairs()).toEqual([]);
  });
});
