// Setup presets: worked losing positions and their winnable perturbations.

export interface Preset {
  name: string;
  piles: number[];
  expected: 'P' | 'N';
}

export const PRESETS: Preset[] = [
  { name: 'aligned valuations', piles: [1440, 864, 672, 1120], expected: 'P' },
  { name: 'one low pile', piles: [294, 208, 304, 432], expected: 'P' },
  { name: 'two low piles', piles: [669, 468, 800, 288], expected: 'P' },
  { name: 'strict ladder', piles: [11133, 12716, 7136, 13312], expected: 'P' },
  { name: 'strict ladder, tall', piles: [45053, 62932, 32576, 64512], expected: 'P' },
  { name: 'one low pile, perturbed', piles: [310, 208, 304, 432], expected: 'N' },
  { name: 'two low piles, perturbed', piles: [653, 452, 800, 288], expected: 'N' },
  { name: 'strict ladder, perturbed', piles: [11133, 12716, 7008, 13312], expected: 'N' },
  { name: 'strict ladder tall, perturbed', piles: [45053, 62932, 28480, 64512], expected: 'N' },
];
