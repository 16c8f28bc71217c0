// Same ten colourblind-safe hues the backend renderer binds to layers by
// declaration order, so server-rendered SVGs and the explorer agree.
export const PALETTE = [
  "#332288", "#88CCEE", "#44AA99", "#117733", "#999933",
  "#DDCC77", "#CC6677", "#882255", "#AA4499", "#DDDDDD",
] as const;

export function layerColor(layers: string[], layer: string): string {
  const index = Math.max(0, layers.indexOf(layer));
  return PALETTE[index % PALETTE.length] as string;
}
