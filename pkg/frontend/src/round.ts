/**
 * Four-decimal presentation rounding, half away from zero.
 *
 * Works on the exact binary value of the double (via BigInt expansion of the
 * IEEE-754 bits) so the output matches the backend's decimal rounding for
 * every representable input, with no double-rounding drift.
 */
export function round4(value: number): string {
  if (!Number.isFinite(value)) {
    throw new RangeError(`round4 expects a finite number, got ${value}`);
  }
  const sign = value < 0 ? "-" : "";
  const view = new DataView(new ArrayBuffer(8));
  view.setFloat64(0, Math.abs(value));
  const bits = view.getBigUint64(0);
  const exponentBits = Number((bits >> 52n) & 0x7ffn);
  const fractionBits = bits & 0xfffffffffffffn;
  let mantissa: bigint;
  let exponent: number;
  if (exponentBits === 0) {
    mantissa = fractionBits;
    exponent = -1074;
  } else {
    mantissa = fractionBits | (1n << 52n);
    exponent = exponentBits - 1075;
  }
  // |value| * 10^4 as the exact fraction numerator/denominator
  let numerator = mantissa * 10000n;
  let denominator = 1n;
  if (exponent >= 0) {
    numerator <<= BigInt(exponent);
  } else {
    denominator = 1n << BigInt(-exponent);
  }
  let scaled = numerator / denominator;
  if ((numerator % denominator) * 2n >= denominator) {
    scaled += 1n; // ties away from zero
  }
  const digits = scaled.toString().padStart(5, "0");
  return `${sign}${digits.slice(0, -4)}.${digits.slice(-4)}`;
}
