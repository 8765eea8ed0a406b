"""Online generalized suffix tree over an integer alphabet.

Words are appended to one growing text, each followed by a unique negative
terminator, and the tree is extended with Ukkonen's algorithm.  Because every
word ends with a fresh terminator, all suffixes are explicit once a word has
been inserted.  A query ``w`` is a suffix of some stored word exactly when
the path spelling ``w`` from the root can be followed by a terminator.
"""

from __future__ import annotations

from typing import Sequence


class _Node:
    __slots__ = ("start", "end", "children", "link", "term")

    def __init__(self, start: int, end: int | None):
        self.start = start
        self.end = end  # exclusive; None for leaves (open end)
        self.children: dict[int, _Node] = {}
        self.link: _Node | None = None
        self.term = False  # some child edge starts with a terminator

    def add(self, sym: int, child: _Node) -> None:
        self.children[sym] = child
        if sym < 0:
            self.term = True


class SuffixIndex:
    """Stores every suffix of the inserted words and answers membership queries.

    Single writer; concurrent readers are fine as long as nothing is inserted.
    """

    def __init__(self, alphabet_size: int | None = None):
        self.alphabet_size = alphabet_size
        self.words = 0
        self._text: list[int] = []
        self._root = _Node(-1, -1)
        self._active_node = self._root
        self._active_edge = 0
        self._active_length = 0
        self._remainder = 0

    def __len__(self) -> int:
        return self.words

    def _edge_len(self, node: _Node) -> int:
        end = len(self._text) if node.end is None else node.end
        return end - node.start

    def _extend(self, c: int) -> None:
        text = self._text
        text.append(c)
        pos = len(text) - 1
        root = self._root
        self._remainder += 1
        last_new: _Node | None = None
        while self._remainder > 0:
            if self._active_length == 0:
                self._active_edge = pos
            a = text[self._active_edge]
            nxt = self._active_node.children.get(a)
            if nxt is None:
                self._active_node.add(a, _Node(pos, None))
                if last_new is not None:
                    last_new.link = self._active_node
                    last_new = None
            else:
                elen = self._edge_len(nxt)
                if self._active_length >= elen:
                    self._active_edge += elen
                    self._active_length -= elen
                    self._active_node = nxt
                    continue
                if text[nxt.start + self._active_length] == c:
                    if last_new is not None and self._active_node is not root:
                        last_new.link = self._active_node
                    self._active_length += 1
                    break
                split = _Node(nxt.start, nxt.start + self._active_length)
                self._active_node.add(a, split)
                split.add(c, _Node(pos, None))
                nxt.start += self._active_length
                split.add(text[nxt.start], nxt)
                if last_new is not None:
                    last_new.link = split
                last_new = split
            self._remainder -= 1
            if self._active_node is root and self._active_length > 0:
                self._active_length -= 1
                self._active_edge = pos - self._remainder + 1
            elif self._active_node is not root:
                self._active_node = self._active_node.link or root

    def _check(self, word: Sequence[int]) -> None:
        for a in word:
            if a < 0 or (self.alphabet_size is not None and a >= self.alphabet_size):
                raise ValueError(f"letter {a} outside alphabet 0..{self.alphabet_size}")

    def insert(self, word: Sequence[int]) -> None:
        """Add ``word`` and thereby all of its suffixes."""
        self._check(word)
        self.words += 1
        for a in word:
            self._extend(a)
        self._extend(-self.words)

    def is_suffix(self, word: Sequence[int]) -> bool:
        """True iff nonempty ``word`` equals a suffix of some inserted word."""
        if not word:
            return False
        node = self._root
        text = self._text
        i = 0
        n = len(word)
        while i < n:
            child = node.children.get(word[i])
            if child is None:
                return False
            elen = self._edge_len(child)
            j = 1
            i += 1
            while j < elen and i < n:
                if text[child.start + j] != word[i]:
                    return False
                i += 1
                j += 1
            if j < elen:
                return text[child.start + j] < 0
            node = child
        return node.term

    def has_root_letter(self, a: int) -> bool:
        """True iff some stored suffix begins with letter ``a``."""
        return a in self._root.children


class NaiveSuffixIndex:
    """Hash set of every suffix; used as a reference for :class:`SuffixIndex`."""

    def __init__(self, alphabet_size: int | None = None):
        self.alphabet_size = alphabet_size
        self.words = 0
        self._suffixes: set[tuple[int, ...]] = set()
        self._letters: set[int] = set()

    def __len__(self) -> int:
        return self.words

    def insert(self, word: Sequence[int]) -> None:
        w = tuple(word)
        for a in w:
            if a < 0 or (self.alphabet_size is not None and a >= self.alphabet_size):
                raise ValueError(f"letter {a} outside alphabet 0..{self.alphabet_size}")
        self.words += 1
        for i in range(len(w)):
            self._suffixes.add(w[i:])
        self._letters.update(w)

    def is_suffix(self, word: Sequence[int]) -> bool:
        return len(word) > 0 and tuple(word) in self._suffixes

    def has_root_letter(self, a: int) -> bool:
        return a in self._letters
