// Backend HTTP contract: POST the sampled matrix with count/model query
// parameters; the server answers {"data": {"english", "estonian",
// "warnings"}}. Validation failures carry their reason in "detail" and
// are surfaced verbatim to the user.

export interface TagResponse {
  english: string[];
  estonian: string[];
  warnings: string[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(detail);
  }
}

export async function postSample(
  baseUrl: string,
  matrix: string[][],
  count: number,
  model: string,
): Promise<TagResponse> {
  const url = new URL(baseUrl);
  url.searchParams.set("count", String(count));
  url.searchParams.set("model", model);

  const response = await fetch(url, {
    method: "POST",
    headers: {
      Accept: "application/json",
      "Content-Type": "application/json",
    },
    body: JSON.stringify({ data: matrix }),
  });

  if (!response.ok) {
    let detail = `request failed with status ${response.status}`;
    try {
      const body = await response.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the generic message
    }
    throw new ApiError(response.status, detail);
  }

  const payload = await response.json();
  const data = payload?.data ?? {};
  return {
    english: Array.isArray(data.english) ? data.english : [],
    estonian: Array.isArray(data.estonian) ? data.estonian : [],
    warnings: Array.isArray(data.warnings) ? data.warnings : [],
  };
}
