/** Display formatting. Percentages show one decimal; undefined ratios
 * render as "n/a", never as 0. */

export function money(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return value.toLocaleString("en-GB", {
    minimumFractionDigits: 2,
    maximumFractionDigits: 2,
  });
}

export function ratio(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return value.toFixed(4);
}

export function percent(value: number | null | undefined): string {
  if (value === null || value === undefined) return "n/a";
  return `${value.toFixed(1)}%`;
}

/** Discount rate arrives as a fraction; show it as a one-decimal percent. */
export function rateAsPercent(fraction: number): string {
  return percent(fraction * 100);
}

export function quantity(value: number, unit: string): string {
  return `${value.toLocaleString("en-GB", { maximumFractionDigits: 2 })} ${unit}/yr`;
}
