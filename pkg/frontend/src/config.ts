// Backend URL is fixed at build time (VITE_BACKEND_URL); the dev default
// matches the service's default listen port.

export const BACKEND_URL: string =
  import.meta.env?.VITE_BACKEND_URL ?? "http://localhost:8000/";

export const TAG_COUNT_OPTIONS = [3, 4, 5, 6, 7, 8, 9, 10] as const;
export const MODEL_OPTIONS = ["gpt-3.5-turbo", "gpt-4"] as const;
export const DEFAULT_TAG_COUNT = 5;
