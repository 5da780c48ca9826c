"""Minimal HTML document model on top of html.parser.

Supports the selector subset the extraction rules need:

    tag            element name, case-insensitive
    .class         class attribute token
    #id            id attribute
    tag.cls#id     compound (all parts must match one element)
    a b            descendant combinator
    a, b           union

Anything else in a selector raises SelectorSyntaxError. The DOM is
deliberately small: elements, text, implicit close of an open <p> when a
new <p> starts, void elements, and script/style/noscript subtrees
excluded from text extraction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from html.parser import HTMLParser

from .errors import SelectorSyntaxError

_VOID_ELEMENTS = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)
_SKIP_TEXT = frozenset({"script", "style", "noscript"})
_WS_RE = re.compile(r"\s+")
_COMPOUND_RE = re.compile(r"^([a-zA-Z][a-zA-Z0-9-]*)?((?:[.#][\w-]+)*)$")
_PART_RE = re.compile(r"[.#][\w-]+")


@dataclass
class Element:
    tag: str
    attrs: dict[str, str]
    children: list[Element | str] = field(default_factory=list)
    parent: Element | None = None

    @property
    def classes(self) -> set[str]:
        return set(self.attrs.get("class", "").split())

    def text(self) -> str:
        """Whitespace-collapsed text of the subtree, skipping scripts."""
        pieces: list[str] = []

        def walk(node: Element | str) -> None:
            if isinstance(node, str):
                pieces.append(node)
                return
            if node.tag in _SKIP_TEXT:
                return
            if node.tag == "br":
                pieces.append(" ")  # line break separates words
                return
            for child in node.children:
                walk(child)

        walk(self)
        return _WS_RE.sub(" ", "".join(pieces)).strip()

    def iter_elements(self):
        for child in self.children:
            if isinstance(child, Element):
                yield child
                yield from child.iter_elements()


class _DomBuilder(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.root = Element("#root", {})
        self._stack = [self.root]

    def handle_starttag(self, tag, attrs):
        if tag == "p" and any(e.tag == "p" for e in self._stack):
            while self._stack[-1].tag != "p":
                self._stack.pop()
            self._stack.pop()  # a new <p> implicitly closes the open one
        element = Element(tag, {k: (v or "") for k, v in attrs}, parent=self._stack[-1])
        self._stack[-1].children.append(element)
        if tag not in _VOID_ELEMENTS:
            self._stack.append(element)

    def handle_startendtag(self, tag, attrs):
        element = Element(tag, {k: (v or "") for k, v in attrs}, parent=self._stack[-1])
        self._stack[-1].children.append(element)

    def handle_endtag(self, tag):
        if any(e.tag == tag for e in self._stack[1:]):
            while self._stack[-1].tag != tag:
                self._stack.pop()
            self._stack.pop()

    def handle_data(self, data):
        if data:
            self._stack[-1].children.append(data)


def parse_html(markup: str) -> Element:
    builder = _DomBuilder()
    builder.feed(markup)
    builder.close()
    return builder.root


@dataclass(frozen=True)
class _Compound:
    tag: str | None
    element_id: str | None
    classes: frozenset[str]

    def matches(self, element: Element) -> bool:
        if self.tag is not None and element.tag != self.tag:
            return False
        if self.element_id is not None and element.attrs.get("id") != self.element_id:
            return False
        return self.classes <= element.classes


def _parse_compound(token: str) -> _Compound:
    match = _COMPOUND_RE.match(token)
    if not match or (not match.group(1) and not match.group(2)):
        raise SelectorSyntaxError(f"unsupported selector part {token!r}")
    tag = match.group(1).lower() if match.group(1) else None
    element_id = None
    classes: set[str] = set()
    for part in _PART_RE.findall(match.group(2)):
        if part.startswith("#"):
            element_id = part[1:]
        else:
            classes.add(part[1:])
    return _Compound(tag, element_id, frozenset(classes))


def parse_selector(selector: str) -> list[list[_Compound]]:
    if not selector.strip():
        raise SelectorSyntaxError("empty selector")
    alternatives = []
    for branch in selector.split(","):
        tokens = branch.split()
        if not tokens:
            raise SelectorSyntaxError(f"empty branch in selector {selector!r}")
        alternatives.append([_parse_compound(t) for t in tokens])
    return alternatives


def select(root: Element, selector: str) -> list[Element]:
    """Document-order matches; an element matching several branches is
    returned once."""
    alternatives = parse_selector(selector)
    results: list[Element] = []
    for element in root.iter_elements():
        for chain in alternatives:
            if not chain[-1].matches(element):
                continue
            remaining = chain[:-1]
            ancestor = element.parent
            while remaining and ancestor is not None:
                if remaining[-1].matches(ancestor):
                    remaining = remaining[:-1]
                ancestor = ancestor.parent
            if not remaining:
                results.append(element)
                break
    return results


def densest_paragraph_block(root: Element) -> list[Element]:
    """Generic extraction fallback: the children of whichever element
    holds the largest cumulative text length in direct <p> children."""
    best: tuple[int, list[Element]] = (0, [])
    for element in root.iter_elements():
        paragraphs = [
            c for c in element.children if isinstance(c, Element) and c.tag == "p"
        ]
        weight = sum(len(p.text()) for p in paragraphs)
        if weight > best[0]:
            best = (weight, paragraphs)
    return best[1]
