import { describe, expect, it } from "vitest";

import { CsvError, readCsv } from "../src/csv";

function csvFile(text: string, name = "data.csv"): File {
  return new File([text], name, { type: "text/csv" });
}

describe("readCsv", () => {
  it("caps a 1000-row file at 10 rows", async () => {
    const text = Array.from({ length: 1000 }, (_, i) => `r${i}a,r${i}b`).join("\n");
    const rows = await readCsv(csvFile(text));
    expect(rows).toHaveLength(10);
    expect(rows[0]).toEqual(["r0a", "r0b"]);
    expect(rows[9]).toEqual(["r9a", "r9b"]);
  });

  it("returns all rows of a 2-row file", async () => {
    const rows = await readCsv(csvFile("h1,h2\na,b\n"));
    expect(rows).toEqual([
      ["h1", "h2"],
      ["a", "b"],
    ]);
  });

  it("honors quoted fields with commas, escaped quotes and newlines", async () => {
    const rows = await readCsv(csvFile('a,"b,c","say ""hi""","x\ny"\nn,o,p,q\n'));
    expect(rows[0]).toEqual(["a", "b,c", 'say "hi"', "x\ny"]);
    expect(rows[1]).toEqual(["n", "o", "p", "q"]);
  });

  it("accepts CRLF terminators", async () => {
    const rows = await readCsv(csvFile("h1,h2\r\na,b\r\n"));
    expect(rows).toEqual([
      ["h1", "h2"],
      ["a", "b"],
    ]);
  });

  it("strips a UTF-8 BOM", async () => {
    const rows = await readCsv(csvFile("﻿h1,h2\na,b\n"));
    expect(rows[0]).toEqual(["h1", "h2"]);
  });

  it("drops trailing blank lines but keeps interior ones", async () => {
    const rows = await readCsv(csvFile("a,b\n\nc,d\n\n\n"));
    expect(rows).toEqual([["a", "b"], [""], ["c", "d"]]);
  });

  it("keeps multi-byte characters split across read chunks intact", async () => {
    // 64 KiB chunk boundary falls inside the two-byte é
    const padding = "a".repeat(64 * 1024 - 1);
    const text = `${padding}é,x\nnext,row\n`;
    const rows = await readCsv(csvFile(text));
    expect(rows[0]?.[0]).toBe(`${padding}é`);
    expect(rows[1]).toEqual(["next", "row"]);
  });

  it("rejects an empty file", async () => {
    await expect(readCsv(csvFile(""))).rejects.toBeInstanceOf(CsvError);
    await expect(readCsv(csvFile("\n\n"))).rejects.toBeInstanceOf(CsvError);
  });

  it("rejects an unterminated quote inside the sampled rows", async () => {
    await expect(readCsv(csvFile('a,"never closed\nmore'))).rejects.toBeInstanceOf(
      CsvError,
    );
  });

  it("ignores an unterminated quote beyond the sampled rows", async () => {
    const good = Array.from({ length: 10 }, (_, i) => `row${i}`).join("\n");
    const rows = await readCsv(csvFile(`${good}\n"unclosed tail`));
    expect(rows).toHaveLength(10);
  });
});
