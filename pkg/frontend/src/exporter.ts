// Export of approved (english, translated) pairs as JSON or CSV.

function csvField(value: string): string {
  if (/[",\r\n]/.test(value)) {
    return `"${value.replaceAll('"', '""')}"`;
  }
  return value;
}

export function toJson(pairs: Array<[string, string]>): string {
  return JSON.stringify(
    pairs.map(([english, translated]) => ({ english, translated })),
    null,
    2,
  );
}

export function toCsv(pairs: Array<[string, string]>): string {
  const lines = ["english,translated"];
  for (const [english, translated] of pairs) {
    lines.push(`${csvField(english)},${csvField(translated)}`);
  }
  return lines.join("\n") + "\n";
}

export function download(filename: string, mime: string, content: string): void {
  const blob = new Blob([content], { type: mime });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  document.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}
