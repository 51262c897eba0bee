"""Built-in English stopword list.

Entries are matched against tokens produced by the normalizer, which splits on
every non-alphanumeric character; contraction stems such as "don" or "isn"
therefore appear as standalone entries.
"""

DEFAULT_STOPWORDS = frozenset(
    """
    i me my myself we our ours ourselves you your yours yourself yourselves
    he him his himself she her hers herself it its itself they them their
    theirs themselves what which who whom this that these those am is are
    was were be been being have has had having do does did doing would
    should could ought a an the and but if or because as until while of at
    by for with about against between into through during before after
    above below to from up down in out on off over under again further
    then once here there when where why how all any both each few more
    most other some such no nor not only own same so than too very can
    will just don didn doesn hadn hasn haven isn aren weren won wouldn
    shouldn couldn mustn mightn needn shan wasn ain ve ll re etc et al
    also may might must shall upon within without among toward towards
    onto whether although though since yet however therefore thus hence
    per via unless whose one another much many little less least every
    either neither
    """.split()
)
