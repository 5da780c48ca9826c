/** One floating tooltip element shared by every view. */
export class Tooltip {
  private readonly el: HTMLDivElement;

  constructor(doc: Document) {
    this.el = doc.createElement("div");
    this.el.className = "lectern-tooltip";
    this.el.style.position = "absolute";
    this.el.style.display = "none";
    doc.body.appendChild(this.el);
  }

  show(text: string, x: number, y: number): void {
    this.el.textContent = text;
    this.el.style.left = `${x}px`;
    this.el.style.top = `${y + 14}px`;
    this.el.style.display = "block";
  }

  hide(): void {
    this.el.style.display = "none";
  }

  get visible(): boolean {
    return this.el.style.display !== "none";
  }

  get text(): string {
    return this.el.textContent ?? "";
  }
}
