// Client-side sampling: parse the first rows of a CSV file without ever
// reading the whole file. Reads fixed-size byte slices and stops slicing
// once the row cap is reached, so multi-gigabyte uploads cost only the
// sampled region. Quoted fields may contain commas, escaped quotes ("")
// and embedded newlines; both \n and \r\n terminators are accepted and a
// UTF-8 BOM is stripped.

export const MAX_SAMPLE_ROWS = 10;

const CHUNK_BYTES = 64 * 1024;
const QUOTE = '"';

export class CsvError extends Error {}

type State = "startField" | "inField" | "inQuoted" | "quoteInQuoted";

class RecordParser {
  private rows: string[][] = [];
  private record: string[] = [];
  private fieldParts: string[] = [];
  private state: State = "startField";
  private recordStarted = false;
  private skipLf = false;

  constructor(
    private readonly delimiter: string,
    private readonly maxRows: number,
  ) {}

  get done(): boolean {
    return this.rows.length >= this.maxRows;
  }

  private endField(): void {
    this.record.push(this.fieldParts.join(""));
    this.fieldParts = [];
  }

  private endRecord(): void {
    this.endField();
    this.rows.push(this.record);
    this.record = [];
    this.recordStarted = false;
  }

  push(text: string): void {
    for (const ch of text) {
      if (this.done) return;
      if (this.skipLf) {
        this.skipLf = false;
        if (ch === "\n") continue;
      }
      if (this.state === "inQuoted") {
        if (ch === QUOTE) {
          this.state = "quoteInQuoted";
        } else {
          this.fieldParts.push(ch);
        }
        continue;
      }
      if (this.state === "quoteInQuoted") {
        if (ch === QUOTE) {
          this.fieldParts.push(QUOTE);
          this.state = "inQuoted";
          continue;
        }
        // lenient: text after a closing quote continues the field unquoted
        this.state = "inField";
      }
      if (ch === this.delimiter) {
        this.endField();
        this.state = "startField";
        this.recordStarted = true;
      } else if (ch === "\n" || ch === "\r") {
        this.skipLf = ch === "\r";
        this.endRecord();
        this.state = "startField";
      } else if (this.state === "startField") {
        this.recordStarted = true;
        if (ch === QUOTE) {
          this.state = "inQuoted";
        } else {
          this.fieldParts.push(ch);
          this.state = "inField";
        }
      } else {
        this.fieldParts.push(ch);
      }
    }
  }

  finish(): string[][] {
    if (!this.done) {
      if (this.state === "inQuoted") {
        throw new CsvError("unterminated quoted field in sampled rows");
      }
      if (this.recordStarted) this.endRecord();
    }
    const rows = this.rows;
    // records holding a single empty cell are blank lines; trim the tail
    while (rows.length > 0 && rows[rows.length - 1]!.length === 1 && rows[rows.length - 1]![0] === "") {
      rows.pop();
    }
    return rows;
  }
}

function stripBom(text: string): string {
  return text.startsWith("﻿") ? text.slice(1) : text;
}

/** Parse the first `maxRows` records of `file`, header row included. */
export async function readCsv(
  file: Blob,
  maxRows: number = MAX_SAMPLE_ROWS,
  delimiter = ",",
): Promise<string[][]> {
  const parser = new RecordParser(delimiter, maxRows);
  const decoder = new TextDecoder("utf-8");
  let offset = 0;
  let first = true;
  while (offset < file.size && !parser.done) {
    const slice = file.slice(offset, offset + CHUNK_BYTES);
    const bytes = await slice.arrayBuffer();
    // stream: true keeps multi-byte characters split across slices intact
    let text = decoder.decode(bytes, { stream: true });
    if (first) {
      text = stripBom(text);
      first = false;
    }
    parser.push(text);
    offset += CHUNK_BYTES;
  }
  if (!parser.done) parser.push(decoder.decode());

  const rows = parser.finish();
  if (rows.length === 0) {
    throw new CsvError("file contains no records");
  }
  return rows;
}
