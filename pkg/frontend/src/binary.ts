// Binary rendering model: right-aligned digit rows with the lowest set
// digit of each pile marked. Digits are indexed 1-based from the right to
// match the engine's reports; BigInt keeps large piles exact.

export interface BinaryRow {
  value: number;
  digits: string; // fixed width, '0'-padded on the left
  markColumn: number; // index from the left of the lowest set digit
}

export function digitAt(value: number, k: number): 0 | 1 {
  if (k < 1) throw new Error(`digit index must be >= 1, got ${k}`);
  return Number((BigInt(value) >> BigInt(k - 1)) & 1n) as 0 | 1;
}

export function lowestSetDigit(value: number): number {
  if (value < 1) throw new Error(`need a positive value, got ${value}`);
  let k = 1;
  while (digitAt(value, k) === 0) k += 1;
  return k;
}

export function binaryRows(piles: number[]): BinaryRow[] {
  const digitsOf = piles.map((p) => BigInt(p).toString(2));
  const width = Math.max(...digitsOf.map((d) => d.length));
  return piles.map((value, i) => {
    const digits = digitsOf[i].padStart(width, '0');
    return { value, digits, markColumn: width - lowestSetDigit(value) };
  });
}
